#include "starlike/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <utility>
#include <vector>

namespace starlike {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kSin1 = std::sin(1.0);
const double kE = std::exp(1.0);

// Clamp distance from the singular angle theta = 0 (mod 2pi) used by the
// unbounded boundaries (half-plane line, sector rays, parabola arms).
constexpr double kThetaClamp = 1e-4;

double wrap_clamp(double theta) {
    double th = std::fmod(theta, 2.0 * kPi);
    if (th < 0.0) th += 2.0 * kPi;
    return std::clamp(th, kThetaClamp, 2.0 * kPi - kThetaClamp);
}

// ------------------------------------------------------------------ radial
// profile about the star center 1, for the shapes without a usable closed
// inequality. rho(psi) is sampled once from the generating boundary and
// membership reduces to one binary search plus a linear interpolation.

struct RadialTable {
    std::vector<double> psi;  // sorted angles of boundary - 1
    std::vector<double> rho;  // matching radii
};

RadialTable build_radial_table(Region k) {
    const int n = 8192;
    std::vector<std::pair<double, double>> pts(n);
    RegionSpec spec = RegionSpec::plain(k);
    for (int i = 0; i < n; ++i) {
        cplx d = boundary(spec, 2.0 * kPi * i / n) - 1.0;
        pts[i] = {std::arg(d), std::abs(d)};
    }
    std::sort(pts.begin(), pts.end());
    RadialTable t;
    t.psi.reserve(n);
    t.rho.reserve(n);
    for (auto& [a, r] : pts) {
        t.psi.push_back(a);
        t.rho.push_back(r);
    }
    return t;
}

const RadialTable& radial_table(Region k) {
    switch (k) {
        case Region::cardioid: {
            static const RadialTable t = build_radial_table(Region::cardioid);
            return t;
        }
        case Region::sine: {
            static const RadialTable t = build_radial_table(Region::sine);
            return t;
        }
        case Region::nephroid: {
            static const RadialTable t = build_radial_table(Region::nephroid);
            return t;
        }
        case Region::rational_r: {
            static const RadialTable t = build_radial_table(Region::rational_r);
            return t;
        }
        default: {
            static const RadialTable t = build_radial_table(Region::rational_rl);
            return t;
        }
    }
}

bool radial_contains(Region k, cplx w) {
    const RadialTable& t = radial_table(k);
    cplx d = w - 1.0;
    double rw = std::abs(d);
    if (rw == 0.0) return true;
    double pw = std::arg(d);
    size_t i = std::upper_bound(t.psi.begin(), t.psi.end(), pw) - t.psi.begin();
    double a0, r0, a1, r1;
    if (i == 0) {
        a0 = t.psi.back() - 2.0 * kPi;
        r0 = t.rho.back();
        a1 = t.psi.front();
        r1 = t.rho.front();
    } else if (i == t.psi.size()) {
        a0 = t.psi.back();
        r0 = t.rho.back();
        a1 = t.psi.front() + 2.0 * kPi;
        r1 = t.rho.front();
    } else {
        a0 = t.psi[i - 1];
        r0 = t.rho[i - 1];
        a1 = t.psi[i];
        r1 = t.rho[i];
    }
    double s = (a1 > a0) ? (pw - a0) / (a1 - a0) : 0.0;
    return rw < r0 + s * (r1 - r0);
}

// ------------------------------------------------------------ polyline cache
// winding_contains is the verification path; queries repeat over the same
// region, so the sampled boundary is cached per (region, params, n).

struct PolyKey {
    Region kind;
    long long alpha_bits;
    long long gamma_bits;
    int n;
    bool operator<(const PolyKey& o) const {
        return std::tie(kind, alpha_bits, gamma_bits, n) <
               std::tie(o.kind, o.alpha_bits, o.gamma_bits, o.n);
    }
};

std::vector<cplx> make_polyline(const RegionSpec& region, int n) {
    std::vector<cplx> p(n);
    bool line_boundary = region.kind == Region::half_plane ||
                         (region.kind == Region::sector && region.gamma == 1.0);
    if (line_boundary) {
        // The boundary is a straight line: equispaced samples of it do not
        // close up into a usable polygon. Take instead the Moebius image of
        // the circle |z| = 1 - delta, a genuine (huge) circle that exhausts
        // the half plane as delta -> 0.
        double al = region.kind == Region::half_plane ? region.alpha : 0.0;
        const double r = 1.0 - 1e-7;
        for (int k = 0; k < n; ++k) {
            cplx z = std::polar(r, 2.0 * kPi * k / n);
            p[k] = (1.0 + (1.0 - 2.0 * al) * z) / (1.0 - z);
        }
    } else {
        for (int k = 0; k < n; ++k)
            p[k] = boundary(region, 2.0 * kPi * k / n);
    }
    return p;
}

const std::vector<cplx>& cached_polyline(const RegionSpec& region, int n) {
    static std::map<PolyKey, std::vector<cplx>> cache;
    static std::mutex mu;
    PolyKey key{region.kind,
                (long long)std::llround(region.alpha * 1e12),
                (long long)std::llround(region.gamma * 1e12), n};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (cache.size() > 64) cache.clear();
        it = cache.emplace(key, make_polyline(region, n)).first;
    }
    return it->second;  // map nodes are stable; safe to read after unlock
}

}  // namespace

RegionSpec RegionSpec::half_plane(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("half-plane order must satisfy 0 <= alpha < 1");
    RegionSpec r;
    r.kind = Region::half_plane;
    r.alpha = alpha;
    return r;
}

RegionSpec RegionSpec::sector(double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::domain_error("sector aperture must satisfy 0 < gamma <= 1");
    RegionSpec r;
    r.kind = Region::sector;
    r.gamma = gamma;
    return r;
}

RegionSpec RegionSpec::plain(Region k) {
    RegionSpec r;
    r.kind = k;
    return r;
}

bool contains(const RegionSpec& region, std::complex<double> w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
    double x = w.real();
    switch (region.kind) {
        case Region::half_plane:
            return x > region.alpha;
        case Region::lemniscate:
            // |w^2-1| < 1 alone also admits the mirror lobe in Re w < 0,
            // which is not part of the image region.
            return x > 0.0 && std::abs(w * w - 1.0) < 1.0;
        case Region::parabola:
            return std::abs(w - 1.0) < x;
        case Region::exponential:
            return x > 0.0 && std::abs(std::log(w)) < 1.0;
        case Region::lune:
            return x > 0.0 && std::abs(w * w - 1.0) < 2.0 * std::abs(w);
        case Region::sector:
            return w != 0.0 &&
                   std::abs(std::arg(w)) < region.gamma * kPi / 2.0;
        case Region::sigmoid: {
            if (w == 2.0) return false;
            cplx v = w / (2.0 - w);
            return v.real() > 0.0 && std::abs(std::log(v)) < 1.0;
        }
        default:
            return radial_contains(region.kind, w);
    }
}

std::complex<double> boundary(const RegionSpec& region, double theta) {
    switch (region.kind) {
        case Region::half_plane: {
            // (1+(1-2a)z)/(1-z) sends e^{i th} to a + i(1-a)cot(th/2).
            double th = wrap_clamp(theta);
            return {region.alpha, (1.0 - region.alpha) / std::tan(0.5 * th)};
        }
        case Region::lemniscate:
            return std::sqrt(1.0 + std::polar(1.0, theta));
        case Region::parabola: {
            // 1 + (2/pi^2) log^2((1-sqrt(u))/(1+sqrt(u))), u = e^{i th}.
            // The map is even in sqrt(u), so the half-angle root suffices.
            double th = wrap_clamp(theta);
            cplx su = std::polar(1.0, 0.5 * th);
            cplx l = std::log((1.0 - su) / (1.0 + su));
            return 1.0 + 2.0 / (kPi * kPi) * l * l;
        }
        case Region::exponential:
            return std::exp(std::polar(1.0, theta));
        case Region::cardioid: {
            cplx z = std::polar(1.0, theta);
            return 1.0 + z * (4.0 / 3.0) + z * z * (2.0 / 3.0);
        }
        case Region::sine:
            return 1.0 + std::sin(std::polar(1.0, theta));
        case Region::lune: {
            cplx z = std::polar(1.0, theta);
            return z + std::sqrt(1.0 + z * z);
        }
        case Region::rational_r: {
            const double k = kSqrt2 + 1.0;
            cplx z = std::polar(1.0, theta);
            return 1.0 + z * (k + z) / (k * (k - z));
        }
        case Region::rational_rl: {
            cplx z = std::polar(1.0, theta);
            return kSqrt2 - (kSqrt2 - 1.0) *
                                std::sqrt((1.0 - z) /
                                          (1.0 + 2.0 * (kSqrt2 - 1.0) * z));
        }
        case Region::sector: {
            // (1+z)/(1-z) sends e^{i th} to i cot(th/2); raising to gamma
            // gives the two rays at +-gamma*pi/2 meeting at the origin.
            double th = wrap_clamp(theta);
            double c = 1.0 / std::tan(0.5 * th);
            double mag = std::pow(std::abs(c), region.gamma);
            double ph = (c >= 0.0 ? 1.0 : -1.0) * region.gamma * kPi / 2.0;
            return std::polar(mag, ph);
        }
        case Region::nephroid: {
            cplx z = std::polar(1.0, theta);
            return 1.0 + z - z * z * z / 3.0;
        }
        case Region::sigmoid:
            return 2.0 / (1.0 + std::exp(-std::polar(1.0, theta)));
    }
    return {};
}

bool winding_contains(const RegionSpec& region, std::complex<double> w,
                      int n_samples, double eps_edge) {
    if (n_samples < 256)
        throw std::invalid_argument("winding_contains: n_samples must be >= 256");
    const std::vector<cplx>& p = cached_polyline(region, n_samples);
    const double e2 = eps_edge * eps_edge;

    // Accumulate the turning angle of p[k] - w around the origin; each
    // segment contributes atan2(cross, dot) in (-pi, pi).
    double total = 0.0;
    double ax = p[0].real() - w.real(), ay = p[0].imag() - w.imag();
    const double fx = ax, fy = ay;
    for (int k = 0; k < n_samples; ++k) {
        double bx, by;
        if (k + 1 < n_samples) {
            bx = p[k + 1].real() - w.real();
            by = p[k + 1].imag() - w.imag();
        } else {
            bx = fx;
            by = fy;
        }
        // Squared distance from w (the origin of this frame) to segment ab.
        double ux = bx - ax, uy = by - ay;
        double len2 = ux * ux + uy * uy;
        double t = len2 > 0.0
                       ? std::clamp(-(ax * ux + ay * uy) / len2, 0.0, 1.0)
                       : 0.0;
        double cx = ax + t * ux, cy = ay + t * uy;
        if (cx * cx + cy * cy < e2)
            throw boundary_indeterminate(
                "winding_contains: point within eps_edge of the boundary "
                "polyline");
        total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
        ax = bx;
        ay = by;
    }
    return std::lround(total / (2.0 * kPi)) == 1;
}

double disk_bound(const RegionSpec& region, double a) {
    if (!(a >= 1.0 - 1e-12))
        throw std::domain_error("disk_bound: center must satisfy a >= 1");
    switch (region.kind) {
        case Region::half_plane:
            return a - region.alpha;
        case Region::lemniscate:
            return kSqrt2 - a;
        case Region::parabola:
            return a - 0.5;
        case Region::exponential:
            return a - 1.0 / kE;
        case Region::cardioid:
            return a - 1.0 / 3.0;
        case Region::sine:
            return 1.0 + kSin1 - a;
        case Region::lune:
            return a - kSqrt2 + 1.0;
        case Region::rational_r:
            return a + 2.0 - 2.0 * kSqrt2;
        case Region::rational_rl: {
            double u = kSqrt2 - a;
            double t = 1.0 - u * u;
            if (t < 0.0)
                throw std::domain_error(
                    "disk_bound: rational-rl center infeasible (a > sqrt(2)+1)");
            return std::sqrt(std::sqrt(t) - t);
        }
        case Region::sector:
            return a * std::sin(kPi * region.gamma / 2.0);
        case Region::nephroid:
            return 5.0 / 3.0 - a;
        case Region::sigmoid:
            return 2.0 * kE / (1.0 + kE) - a;
    }
    return 0.0;
}

double max_feasible_center(const RegionSpec& region) {
    switch (region.kind) {
        case Region::half_plane:
        case Region::sector:
            return std::numeric_limits<double>::infinity();
        case Region::lemniscate:
        case Region::lune:
        case Region::rational_r:
        case Region::rational_rl:
            return kSqrt2;
        case Region::parabola:
            // past a = 3/2 the nearest boundary point moves off the vertex
            // and the threshold a - 1/2 overshoots the true clearance
            return 1.5;
        case Region::exponential:
            return 0.5 * (kE + 1.0 / kE);
        case Region::cardioid:
        case Region::nephroid:
            return 5.0 / 3.0;
        case Region::sine:
            return 1.0 + kSin1;
        case Region::sigmoid:
            return 2.0 * kE / (1.0 + kE);
    }
    return 1.0;
}

std::string_view region_name(Region k) {
    switch (k) {
        case Region::half_plane: return "halfplane";
        case Region::lemniscate: return "lemniscate";
        case Region::parabola: return "parabola";
        case Region::exponential: return "exponential";
        case Region::cardioid: return "cardioid";
        case Region::sine: return "sine";
        case Region::lune: return "lune";
        case Region::rational_r: return "rational-r";
        case Region::rational_rl: return "rational-rl";
        case Region::sector: return "sector";
        case Region::nephroid: return "nephroid";
        case Region::sigmoid: return "sigmoid";
    }
    return "";
}

std::optional<Region> region_from_name(std::string_view name) {
    for (Region k : kAllRegions)
        if (region_name(k) == name) return k;
    return std::nullopt;
}

}  // namespace starlike
