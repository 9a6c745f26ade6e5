#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starlike/regions.hpp"
#include "starlike/rootfind.hpp"

namespace starlike {

// The three quotient classes: f1 pairs Re(f/g) > 0 with Re((1+z)g/z) > 0,
// f2 replaces the first condition by |f/g - 1| < 1, f3 constrains f alone
// through Re((1+z)f/z) > 0. Fixed second coefficients b (and c for the
// paired classes) enter only through the derived parameters below.
enum class Family { f1, f2, f3 };

// Thrown for (family, region) pairs outside the covered results, and for
// extremal requests where no construction exists.
struct unsupported_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ClassParams {
    Family family = Family::f1;
    double b = 0.0;
    double c = 0.0;   // ignored for f3
    double cp = 0.0;  // |3c+1|
    double d = 0.0;   // |5b-3c|  (f1)
    double dp = 0.0;  // |3c-4b|  (f2)
    double bp = 0.0;  // |1+3b|   (f3)
    std::vector<std::string> warnings;
};

// |b| <= 1 and |c| <= 1 are hard requirements (domain_error); the derived
// parameters exceeding their nominal range (<= 2, and d' <= 1 for f2) only
// attach warnings, since every formula stays evaluable.
ClassParams derive_params(Family family, double b, double c = 0.0);

// Construct params from the derived quantities directly; the radius
// formulas depend on nothing else. f1: x = c', y = d; f2: x = c', y = d';
// f3: x = b'. The original b, c are recorded as NaN.
ClassParams params_from_derived(Family family, double x, double y = 0.0);

// zf'/f on |z| = r is confined to the disk |w - a(r)| <= L(r) with
// a(r) = 1/(1-r^2).
struct GrowthEnvelope {
    double a;
    double L;
};

GrowthEnvelope growth(const ClassParams& cls, double r);

// disk_bound(region, a(r)) - L(r): positive while the envelope disk is
// certified inside the region, zero at the radius. For rational-rl past
// the feasible-center cap the value is -infinity.
double margin(const ClassParams& cls, const RegionSpec& region, double r);

enum class StatementForm {
    printed,  // the equation as displayed in the radius statements
    proof     // with the proof-text coefficients for the two known misprints
};

struct StatementEquation {
    std::optional<Polynomial> poly;    // absent for rational-rl
    std::function<double(double)> fn;  // always evaluable
    double scan_hi = 0.0;              // upper end of the root scan
    bool flagged = false;  // printed form known to disagree with the proof
};

// Left-hand side of the displayed radius equation. Polynomial for every
// region except rational-rl, whose display contains a square root.
StatementEquation statement_equation(const ClassParams& cls,
                                     const RegionSpec& region,
                                     StatementForm form = StatementForm::printed);

// The same equation rebuilt from the growth envelope and the containment
// threshold: scale*N - Btilde*D with L = N/((1-r^2) D) and
// Btilde/scale = (1-r^2) disk_bound. Typo-resistant reference form used to
// cross-check the transcriptions. Not defined for rational-rl.
Polynomial generic_statement(const ClassParams& cls, const RegionSpec& region);

enum class SolveMethod { envelope_crossing, statement_polynomial };

struct RadiusResult {
    double radius = 0.0;
    double residual = 0.0;
    double lo = 0.0, hi = 0.0;  // isolating bracket
    SolveMethod method = SolveMethod::envelope_crossing;
    std::optional<double> oracle_radius;  // brute-force cross-check, if run
};

// First zero of margin on (0, 1). Empty result = no crossing: the property
// holds on the whole disk. scan_n <= 0 picks default_scan_n().
std::optional<RadiusResult> radius_by_crossing(const ClassParams& cls,
                                               const RegionSpec& region,
                                               int scan_n = 0);

// First root of the displayed equation; same conventions.
std::optional<RadiusResult> radius_by_statement(
    const ClassParams& cls, const RegionSpec& region,
    StatementForm form = StatementForm::printed, int scan_n = 0);

bool region_supported(Family family, Region k);
std::vector<Region> supported_regions(Family family);

// Whether the radius is claimed sharp for this pair (f1: all but
// rational-rl and sector; f2: none; f3: lemniscate only).
bool sharpness_claimed(Family family, Region k);

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

}  // namespace starlike
