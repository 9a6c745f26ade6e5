#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace starlike {

// The twelve target regions. Each is the image of the unit disk under a
// univalent map phi with phi(0) = 1, so every region is a neighborhood of 1
// and is star-shaped about it.
enum class Region {
    half_plane,   // Re w > alpha
    lemniscate,   // right lobe of |w^2 - 1| < 1
    parabola,     // |w - 1| < Re w
    exponential,  // |log w| < 1
    cardioid,     // interior of 1 + 4z/3 + 2z^2/3
    sine,         // interior of 1 + sin z
    lune,         // |w^2 - 1| < 2|w|, right half
    rational_r,   // interior of 1 + z(k+z)/(k(k-z)), k = sqrt(2)+1
    rational_rl,  // interior of sqrt(2) - (sqrt(2)-1) sqrt((1-z)/(1+2(sqrt(2)-1)z))
    sector,       // |arg w| < gamma*pi/2
    nephroid,     // interior of 1 + z - z^3/3
    sigmoid,      // |log(w/(2-w))| < 1
};

inline constexpr std::array<Region, 12> kAllRegions = {
    Region::half_plane, Region::lemniscate, Region::parabola,
    Region::exponential, Region::cardioid,  Region::sine,
    Region::lune,        Region::rational_r, Region::rational_rl,
    Region::sector,      Region::nephroid,   Region::sigmoid,
};

struct RegionSpec {
    Region kind = Region::half_plane;
    double alpha = 0.0;  // half-plane order, 0 <= alpha < 1
    double gamma = 1.0;  // sector aperture, 0 < gamma <= 1

    static RegionSpec half_plane(double alpha = 0.0);
    static RegionSpec sector(double gamma);
    static RegionSpec plain(Region k);  // parameterless variants (and defaults)
};

// Thrown by winding_contains when the query point sits within eps_edge of
// the sampled boundary polyline, i.e. membership cannot be decided at the
// requested resolution.
struct boundary_indeterminate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Open-region membership. Closed-form predicates where the defining
// inequality is available; the remaining shapes (cardioid, sine, nephroid,
// rational-r, rational-rl) use a cached radial profile about the star
// center 1. Never throws; branch obstructions classify as outside.
bool contains(const RegionSpec& region, std::complex<double> w);

// phi(e^{i theta}) for the region's generating map. The half-plane line,
// the sector rays and the parabola arms are unbounded, so theta is clamped
// 1e-4 away from the singular angle (theta = 0 mod 2pi).
std::complex<double> boundary(const RegionSpec& region, double theta);

// Winding number of the sampled boundary polyline about w (1 = inside).
// Independent of contains(); used to cross-check it. The half plane (and
// the sector with gamma = 1) has a degenerate line boundary, so its
// polyline is taken along the Moebius image of |z| = 1 - 1e-7, which is a
// genuine circle exhausting the half plane.
bool winding_contains(const RegionSpec& region, std::complex<double> w,
                      int n_samples = 8192, double eps_edge = 1e-9);

// Sufficient containment radius about a real center a >= 1: for
// 0 < rho < disk_bound(region, a) the disk |w - a| <= rho lies in the
// region. These are the per-region thresholds the radius derivations use,
// not exact Euclidean clearances. Nonpositive return = no disk certified.
// rational-rl throws std::domain_error once a > sqrt(2) + 1 (the nested
// radical turns complex: infeasible center).
double disk_bound(const RegionSpec& region, double a);

// Largest center for which disk_bound's sufficiency statement is valid
// (+infinity for the half plane and the sector). Beyond it either the
// threshold is nonpositive or the certified disk would leak out of the
// region; samplers must stay below this cap.
double max_feasible_center(const RegionSpec& region);

std::string_view region_name(Region k);
std::optional<Region> region_from_name(std::string_view name);

}  // namespace starlike
