#include "starlike/envelope.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
const double kR2 = std::sqrt(2.0);
const double kE = std::exp(1.0);
const double kS1 = std::sin(1.0);

// |zp'/p| quotients from the coefficient-fixed Caratheodory bound, at the
// two orders that occur (0 and 1/2), already divided by 2(1-alpha)r/(1-r^2).
double term_order0(double k, double r) {
    return (k * r * r + 4.0 * r + k) / (r * r + k * r + 1.0);
}

double term_order_half(double k, double r) {
    return (k * r * r + 2.0 * r + k) / (k * r + 1.0);
}

// Upper end of the r-scan for rational-rl: a(r) reaches sqrt(2)+1 at
// r = sqrt(2 - sqrt(2)), beyond which the containment radical is complex.
const double kRlScanCap = std::sqrt(2.0 - kR2) - 1e-12;

void check_support(Family family, Region k) {
    if (!region_supported(family, k))
        throw unsupported_error(
            std::string("no radius result for family ") +
            std::string(family_name(family)) + " and region " +
            std::string(region_name(k)));
}

void attach_warnings(ClassParams& p) {
    switch (p.family) {
        case Family::f1:
            if (p.cp > 2.0)
                p.warnings.push_back("c' = |3c+1| exceeds 2: outside the stated parameter range");
            if (p.d > 2.0)
                p.warnings.push_back("d = |5b-3c| exceeds 2: outside the stated parameter range");
            break;
        case Family::f2:
            if (p.cp > 2.0)
                p.warnings.push_back("c' = |3c+1| exceeds 2: outside the stated parameter range");
            if (p.dp > 2.0)
                p.warnings.push_back("d' = |3c-4b| exceeds 2: outside the stated parameter range");
            else if (p.dp > 1.0)
                p.warnings.push_back(
                    "d' = |3c-4b| exceeds 1: the order-1/2 coefficient bound assumes |b| <= 1");
            break;
        case Family::f3:
            if (p.bp > 2.0)
                p.warnings.push_back("b' = |1+3b| exceeds 2: outside the stated parameter range");
            break;
    }
}

// Envelope numerator/denominator: L(r) = N(r) / ((1-r^2) D(r)), with D the
// product of the quotient denominators (positive on [0,1)).
std::pair<Polynomial, Polynomial> envelope_nd(const ClassParams& p) {
    switch (p.family) {
        case Family::f1: {
            double s = p.cp + p.d, q = p.cp * p.d;
            return {Polynomial({0.0, 1 + s, 8 + s + 2 * q, 2 + 6 * s + q,
                                8 + s + 2 * q, 1 + s}),
                    Polynomial({1.0, s, 2 + q, s, 1.0})};
        }
        case Family::f2: {
            double cp = p.cp, dp = p.dp, q = cp * dp;
            return {Polynomial({0.0, 1 + cp + dp, 6 + cp + dp + 2 * q,
                                1 + 3 * cp + 6 * dp + q, 2 + dp + 2 * q, dp}),
                    Polynomial({1.0, cp + dp, 1 + q, dp})};
        }
        default: {
            double bp = p.bp;
            return {Polynomial({0.0, 1 + bp, 4 + bp, 1 + bp}),
                    Polynomial({1.0, bp, 1.0})};
        }
    }
}

// (1-r^2) * disk_bound(region, 1/(1-r^2)) equals B(r)/scale for the
// polynomial B returned here (degree <= 2 in every case).
std::pair<Polynomial, double> bound_poly(const RegionSpec& region) {
    switch (region.kind) {
        case Region::half_plane:
            return {Polynomial({1.0 - region.alpha, 0.0, region.alpha}), 1.0};
        case Region::lemniscate:
            return {Polynomial({kR2 - 1.0, 0.0, -kR2}), 1.0};
        case Region::parabola:
            return {Polynomial({1.0, 0.0, 1.0}), 2.0};
        case Region::exponential:
            return {Polynomial({kE - 1.0, 0.0, 1.0}), kE};
        case Region::cardioid:
            return {Polynomial({2.0, 0.0, 1.0}), 3.0};
        case Region::sine:
            return {Polynomial({kS1, 0.0, -(1.0 + kS1)}), 1.0};
        case Region::lune:
            return {Polynomial({2.0 - kR2, 0.0, kR2 - 1.0}), 1.0};
        case Region::rational_r:
            return {Polynomial({3.0 - 2.0 * kR2, 0.0, 2.0 * kR2 - 2.0}), 1.0};
        case Region::sector: {
            double sg = std::sin(kPi * region.gamma / 2.0);
            return {Polynomial({sg}), 1.0};
        }
        case Region::nephroid:
            return {Polynomial({2.0, 0.0, -5.0}), 3.0};
        case Region::sigmoid:
            return {Polynomial({kE - 1.0, 0.0, -2.0 * kE}), 1.0 + kE};
        default:
            throw unsupported_error("no polynomial containment form for rational-rl");
    }
}

// ---------------------------------------------------------- printed forms
// Coefficient lists (ascending) transcribed from the displayed equations.
// The proof form differs from the printed one in exactly two places, both
// marked below.

std::vector<double> stmt_f1(Region k, double cp, double d, double alpha,
                            double gamma, StatementForm form) {
    const double s = cp + d, q = cp * d, al = alpha;
    switch (k) {
        case Region::half_plane:
            return {al - 1, 1 + al * s, 6 + al + s + (1 + al) * q,
                    2 + 5 * s + q, 7 - al + s + (2 - al) * q,
                    1 + (1 - al) * s, -al};
        case Region::lemniscate:
            return {1 - kR2, 1 + kR2 * (kR2 - 1) * s,
                    10 - kR2 + s + (3 - kR2) * q, 2 + 7 * s + q,
                    9 + kR2 + s + kR2 * (kR2 + 1) * q, 1 + (1 + kR2) * s, kR2};
        case Region::parabola:
            return {-1, 2 + s, 13 + 2 * s + 3 * q, 4 + 10 * s + 2 * q,
                    13 + 2 * s + 3 * q, 2 + s, -1};
        case Region::exponential:
            return {1 - kE, kE + s, 6 * kE + 1 + kE * s + (kE + 1) * q,
                    2 * kE + 5 * kE * s + kE * q,
                    7 * kE - 1 + kE * s + (2 * kE - 1) * q,
                    kE + (kE - 1) * s, -1};
        case Region::cardioid:
            return {-2, 3 + s, 19 + 3 * s + 4 * q, 6 + 15 * s + 3 * q,
                    20 + 3 * s + 5 * q, 3 + 2 * s, -1};
        case Region::sine:
            return {-kS1, 1 + (1 - kS1) * s, 9 - kS1 + s + (2 - kS1) * q,
                    2 + 7 * s + q, 10 + kS1 + s + (3 + kS1) * q,
                    1 + (2 + kS1) * s, 1 + kS1};
        case Region::lune:
            return {kR2 - 2, 1 + (kR2 - 1) * s, 5 + kR2 + s + kR2 * q,
                    2 + 5 * s + q, 8 - kR2 + s + (3 - kR2) * q,
                    1 + kR2 * (kR2 - 1) * s, -(kR2 - 1)};
        case Region::rational_r: {
            // The statement prints (4+2sqrt2)c'd in the r^4 coefficient;
            // the proof carries (4-2sqrt2)c'd, which matches the envelope.
            double c4 = form == StatementForm::printed ? 4 + 2 * kR2
                                                       : 4 - 2 * kR2;
            return {2 * kR2 - 3, 1 + (2 * kR2 - 2) * s,
                    4 + 2 * kR2 + s + (2 * kR2 - 1) * q, 2 + 5 * s + q,
                    9 - 2 * kR2 + s + c4 * q, 1 + (3 - 2 * kR2) * s,
                    -(2 * kR2 - 2)};
        }
        case Region::sector: {
            double sg = std::sin(kPi * gamma / 2.0);
            return {-sg, 1 + (1 - sg) * s, 8 - 2 * sg + s + (2 - sg) * q,
                    2 + (6 - sg) * s + q, 8 - sg + s + 2 * q, 1 + s};
        }
        case Region::nephroid:
            return {-2, 3 + s, 25 + 3 * s + 4 * q, 6 + 21 * s + 3 * q,
                    32 + 3 * s + 11 * q, 3 + 8 * s, 5};
        case Region::sigmoid:
            return {1 - kE, (1 + kE) + 2 * s,
                    2 * (5 + 4 * kE) + (1 + kE) * s + (3 + kE) * q,
                    (1 + kE) * (2 + q) + 7 * (1 + kE) * s,
                    9 + 11 * kE + (1 + kE) * s + 2 * (1 + 2 * kE) * q,
                    1 + kE + (1 + 3 * kE) * s, 2 * kE};
        default:
            throw unsupported_error("rational-rl has no polynomial statement");
    }
}

std::vector<double> stmt_f2(Region k, double cp, double dp, double alpha,
                            double gamma, StatementForm form) {
    const double s = cp + dp, q = cp * dp, al = alpha;
    switch (k) {
        case Region::half_plane:
            return {al - 1, 1 + al * s, 5 + cp + dp + (1 + al) * q,
                    1 + (3 - al) * cp + 5 * dp + q, (2 - al) * (1 + q) + dp,
                    (1 - al) * dp};
        case Region::lemniscate: {
            // The statement's leading term reads (1+sqrt2)r^5; the proof has
            // (1+sqrt2)d'r^5, which matches the envelope.
            double lead = form == StatementForm::printed ? 1 + kR2
                                                         : (1 + kR2) * dp;
            return {1 - kR2, 1 + kR2 * (kR2 - 1) * s,
                    7 + cp + dp + (3 - kR2) * q, 1 + (3 + kR2) * cp + 7 * dp + q,
                    kR2 * (1 + kR2) * (1 + q) + dp, lead};
        }
        case Region::parabola:
            return {-1, 2 + s, 10 + 2 * s + 3 * q,
                    2 + 5 * cp + 10 * dp + 2 * q, 3 + 2 * dp + 3 * q, dp};
        case Region::exponential:
            return {1 - kE, kE + s, 5 * kE + kE * s + (kE + 1) * q,
                    kE + (3 * kE - 1) * cp + 5 * kE * dp + kE * q,
                    2 * kE - 1 + kE * dp + (2 * kE - 1) * q, (kE - 1) * dp};
        case Region::cardioid:
            return {-2, 3 + s, 15 + 3 * s + 4 * q,
                    3 + 8 * cp + 15 * dp + 3 * q, 5 + 3 * dp + 5 * q, 2 * dp};
        case Region::sine:
            return {-kS1, 1 + (1 - kS1) * s, 7 + cp + dp + (2 - kS1) * q,
                    1 + (4 + kS1) * cp + 7 * dp + q, (3 + kS1) * (1 + q) + dp,
                    (2 + kS1) * dp};
        case Region::lune:
            return {kR2 * (1 - kR2), 1 + (kR2 - 1) * s, 5 + cp + dp + kR2 * q,
                    1 + (4 - kR2) * cp + 5 * dp + q, (3 - kR2) * (1 + q) + dp,
                    kR2 * (kR2 - 1) * dp};
        case Region::rational_r:
            return {2 * kR2 - 3, 1 + (2 * kR2 - 2) * s,
                    5 + cp + dp + (2 * kR2 - 1) * q,
                    1 + (5 - 2 * kR2) * cp + 5 * dp + q,
                    (4 - 2 * kR2) * (1 + q) + dp, (3 - 2 * kR2) * dp};
        case Region::sector: {
            double sg = std::sin(kPi * gamma / 2.0);
            return {-sg, 1 + (1 - sg) * s, 6 - sg + cp + dp + (2 - sg) * q,
                    1 + 3 * cp + (6 - sg) * dp + q, 2 + dp + 2 * q, dp};
        }
        case Region::nephroid:
            return {-2, 3 + s, 21 + 3 * s + 4 * q,
                    3 + 7 * (2 * cp + 3 * dp) + 3 * q, 11 * (1 + q) + 3 * dp,
                    8 * dp};
        case Region::sigmoid:
            return {1 - kE, 1 + kE + 2 * s,
                    7 * (1 + kE) + (1 + kE) * s + (3 + kE) * q,
                    (1 + kE) * (1 + q) + (3 + 5 * kE) * cp + 7 * (1 + kE) * dp,
                    2 * (1 + 2 * kE) * (1 + q) + (1 + kE) * dp,
                    (1 + 3 * kE) * dp};
        default:
            throw unsupported_error("rational-rl has no polynomial statement");
    }
}

std::vector<double> stmt_f3(Region k, double bp, double alpha) {
    const double al = alpha;
    switch (k) {
        case Region::half_plane:
            return {al - 1, 1 + al * bp, 3 + bp, 1 + (1 - al) * bp, -al};
        case Region::lemniscate:
            return {1 - kR2, 1 + kR2 * (kR2 - 1) * bp, 5 + bp,
                    1 + (1 + kR2) * bp, kR2};
        case Region::parabola:
            return {-1, 2 + bp, 2 * (3 + bp), 2 + bp, -1};
        case Region::exponential:
            return {1 - kE, kE + bp, kE * (3 + bp), kE + (kE - 1) * bp, -1};
        default:
            throw unsupported_error("no radius result for family f3 and this region");
    }
}

}  // namespace

ClassParams derive_params(Family family, double b, double c) {
    if (!(std::abs(b) <= 1.0))
        throw std::domain_error("derive_params: |b| <= 1 required");
    if (family != Family::f3 && !(std::abs(c) <= 1.0))
        throw std::domain_error("derive_params: |c| <= 1 required");
    ClassParams p;
    p.family = family;
    p.b = b;
    p.c = family == Family::f3 ? 0.0 : c;
    p.cp = std::abs(3.0 * p.c + 1.0);
    p.d = std::abs(5.0 * b - 3.0 * p.c);
    p.dp = std::abs(3.0 * p.c - 4.0 * b);
    p.bp = std::abs(1.0 + 3.0 * b);
    attach_warnings(p);
    return p;
}

ClassParams params_from_derived(Family family, double x, double y) {
    if (!(x >= 0.0) || !(y >= 0.0))
        throw std::domain_error("params_from_derived: derived parameters are nonnegative");
    ClassParams p;
    p.family = family;
    p.b = p.c = std::numeric_limits<double>::quiet_NaN();
    switch (family) {
        case Family::f1:
            p.cp = x;
            p.d = y;
            break;
        case Family::f2:
            p.cp = x;
            p.dp = y;
            break;
        case Family::f3:
            p.bp = x;
            break;
    }
    attach_warnings(p);
    return p;
}

GrowthEnvelope growth(const ClassParams& cls, double r) {
    if (!(r >= 0.0 && r <= 1.0 - 1e-9))
        throw std::domain_error("growth: r must lie in [0, 1 - 1e-9]");
    double a = 1.0 / (1.0 - r * r);
    double pre = r * a;
    double t = 0.0;
    switch (cls.family) {
        case Family::f1:
            t = term_order0(cls.cp, r) + term_order0(cls.d, r) + 1.0;
            break;
        case Family::f2:
            t = term_order0(cls.cp, r) + term_order_half(cls.dp, r) + 1.0;
            break;
        case Family::f3:
            t = term_order0(cls.bp, r) + 1.0;
            break;
    }
    return {a, pre * t};
}

double margin(const ClassParams& cls, const RegionSpec& region, double r) {
    auto [a, L] = growth(cls, r);
    if (region.kind == Region::rational_rl && a > kR2 + 1.0)
        return -std::numeric_limits<double>::infinity();
    return disk_bound(region, a) - L;
}

Polynomial generic_statement(const ClassParams& cls, const RegionSpec& region) {
    check_support(cls.family, region.kind);
    auto [n, d] = envelope_nd(cls);
    auto [bt, scale] = bound_poly(region);
    Polynomial out = scale * n - bt * d;
    out.trim(1e-13);
    return out;
}

StatementEquation statement_equation(const ClassParams& cls,
                                     const RegionSpec& region,
                                     StatementForm form) {
    check_support(cls.family, region.kind);
    StatementEquation se;
    if (region.kind == Region::rational_rl) {
        // N^2 - D^2 [(1-r^2) sqrt((1-r^2)^2 - (sqrt2(1-r^2)-1)^2)
        //            - (1-r^2)^2 + (sqrt2(1-r^2)-1)^2]; identical in the
        // statement and the proof.
        auto [n, d] = envelope_nd(cls);
        se.fn = [n = std::move(n), d = std::move(d)](double r) {
            double w = 1.0 - r * r;
            double g = kR2 * w - 1.0;
            double rad = w * w - g * g;
            if (rad < 0.0) return std::numeric_limits<double>::quiet_NaN();
            double t = w * std::sqrt(rad) - w * w + g * g;
            double nv = n(r), dv = d(r);
            return nv * nv - dv * dv * t;
        };
        se.scan_hi = kRlScanCap;
        se.flagged = false;
        return se;
    }
    std::vector<double> coeffs;
    switch (cls.family) {
        case Family::f1:
            coeffs = stmt_f1(region.kind, cls.cp, cls.d, region.alpha,
                             region.gamma, form);
            break;
        case Family::f2:
            coeffs = stmt_f2(region.kind, cls.cp, cls.dp, region.alpha,
                             region.gamma, form);
            break;
        case Family::f3:
            coeffs = stmt_f3(region.kind, cls.bp, region.alpha);
            break;
    }
    Polynomial p(std::move(coeffs));
    p.trim(0.0);
    se.fn = [p](double r) { return p(r); };
    se.poly = std::move(p);
    se.scan_hi = 1.0 - 1e-9;
    se.flagged = form == StatementForm::printed &&
                 ((cls.family == Family::f1 && region.kind == Region::rational_r) ||
                  (cls.family == Family::f2 && region.kind == Region::lemniscate));
    return se;
}

namespace {

std::optional<RadiusResult> package_root(const std::function<double(double)>& f,
                                         double hi, int scan_n,
                                         SolveMethod method) {
    if (scan_n <= 0) scan_n = default_scan_n();
    RootResult rr = smallest_root(f, 0.0, hi, scan_n, 9e-13);
    if (rr.status == RootStatus::no_root) return std::nullopt;
    if (rr.status == RootStatus::eval_error)
        throw std::runtime_error("radius solve: non-finite value at r = " +
                                 std::to_string(rr.bad_abscissa));
    RadiusResult out;
    out.radius = rr.root;
    out.residual = rr.residual;
    out.lo = rr.lo;
    out.hi = rr.hi;
    // keep the reported bracket strictly around the radius
    if (out.lo >= out.radius) out.lo = std::nextafter(out.radius, -1.0);
    if (out.hi <= out.radius) out.hi = std::nextafter(out.radius, 2.0);
    out.method = method;
    return out;
}

}  // namespace

std::optional<RadiusResult> radius_by_crossing(const ClassParams& cls,
                                               const RegionSpec& region,
                                               int scan_n) {
    check_support(cls.family, region.kind);
    double hi = region.kind == Region::rational_rl ? kRlScanCap : 1.0 - 1e-9;
    auto f = [&cls, &region](double r) { return margin(cls, region, r); };
    return package_root(f, hi, scan_n, SolveMethod::envelope_crossing);
}

std::optional<RadiusResult> radius_by_statement(const ClassParams& cls,
                                                const RegionSpec& region,
                                                StatementForm form,
                                                int scan_n) {
    StatementEquation se = statement_equation(cls, region, form);
    return package_root(se.fn, se.scan_hi, scan_n,
                        SolveMethod::statement_polynomial);
}

bool region_supported(Family family, Region k) {
    if (family != Family::f3) return true;
    return k == Region::half_plane || k == Region::lemniscate ||
           k == Region::parabola || k == Region::exponential;
}

std::vector<Region> supported_regions(Family family) {
    std::vector<Region> out;
    for (Region k : kAllRegions)
        if (region_supported(family, k)) out.push_back(k);
    return out;
}

bool sharpness_claimed(Family family, Region k) {
    switch (family) {
        case Family::f1:
            return k != Region::rational_rl && k != Region::sector;
        case Family::f2:
            return false;
        case Family::f3:
            return k == Region::lemniscate;
    }
    return false;
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::f1: return "f1";
        case Family::f2: return "f2";
        case Family::f3: return "f3";
    }
    return "";
}

std::optional<Family> family_from_name(std::string_view name) {
    std::string low;
    for (char ch : name)
        low.push_back(char(std::tolower(static_cast<unsigned char>(ch))));
    if (low == "f1") return Family::f1;
    if (low == "f2") return Family::f2;
    if (low == "f3") return Family::f3;
    return std::nullopt;
}

}  // namespace starlike
