#include "starlike/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace starlike {

double Polynomial::operator()(double r) const {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        v = v * r + *it;
    return v;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
    std::complex<double> v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        v = v * z + *it;
    return v;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    for (size_t k = 1; k < coeffs.size(); ++k)
        d.coeffs.push_back(double(k) * coeffs[k]);
    return d;
}

void Polynomial::trim(double eps) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= eps)
        coeffs.pop_back();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.coeffs.empty() || b.coeffs.empty()) return out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

Polynomial operator*(double k, const Polynomial& a) {
    Polynomial out = a;
    for (double& c : out.coeffs) c *= k;
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
    for (size_t i = 0; i < out.coeffs.size(); ++i) {
        double x = i < a.coeffs.size() ? a.coeffs[i] : 0.0;
        double y = i < b.coeffs.size() ? b.coeffs[i] : 0.0;
        out.coeffs[i] = x - y;
    }
    return out;
}

namespace {

constexpr double kExactHit = 1e-14;

RootResult exact_hit(double x, double fx) {
    RootResult res;
    res.status = RootStatus::found;
    res.root = x;
    res.residual = std::abs(fx);
    res.lo = res.hi = x;
    return res;
}

}  // namespace

RootResult smallest_root(const std::function<double(double)>& f,
                         double lo, double hi, int scan_n, double tol) {
    RootResult res;
    scan_n = std::max(scan_n, 2);
    const double step = (hi - lo) / scan_n;

    double xa = lo, fa = f(xa);
    if (!std::isfinite(fa)) {
        res.status = RootStatus::eval_error;
        res.bad_abscissa = xa;
        return res;
    }
    if (std::abs(fa) <= kExactHit) return exact_hit(xa, fa);

    double xb = xa, fb = fa;
    bool bracketed = false;
    for (int i = 1; i <= scan_n; ++i) {
        xb = (i == scan_n) ? hi : lo + i * step;
        fb = f(xb);
        if (!std::isfinite(fb)) {
            res.status = RootStatus::eval_error;
            res.bad_abscissa = xb;
            return res;
        }
        if (std::abs(fb) <= kExactHit) return exact_hit(xb, fb);
        if ((fa > 0.0) != (fb > 0.0)) {  // first bracket wins
            bracketed = true;
            break;
        }
        xa = xb;
        fa = fb;
    }
    if (!bracketed) {
        res.status = RootStatus::no_root;
        return res;
    }

    // Bisect the bracket down to the requested width.
    double a = xa, b = xb, va = fa;
    while (b - a > tol) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (!std::isfinite(fm)) {
            res.status = RootStatus::eval_error;
            res.bad_abscissa = m;
            return res;
        }
        if (std::abs(fm) <= kExactHit) {
            a = b = m;
            break;
        }
        if ((fm > 0.0) == (va > 0.0)) {
            a = m;
            va = fm;
        } else {
            b = m;
        }
    }

    double best = 0.5 * (a + b);
    double best_f = f(best);
    if (!std::isfinite(best_f)) best_f = HUGE_VAL;

    // Secant polish on the refined bracket; iterates are clamped so the
    // result can never escape [a, b].
    double x0 = a, f0 = va, x1 = b, f1 = f(b);
    if (std::isfinite(f1)) {
        for (int it = 0; it < 50; ++it) {
            if (f1 == f0) break;
            double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
            x2 = std::clamp(x2, a, b);
            double f2 = f(x2);
            if (!std::isfinite(f2)) break;
            if (std::abs(f2) < std::abs(best_f)) {
                best = x2;
                best_f = f2;
            }
            if (std::abs(f2) <= kExactHit || x2 == x1) break;
            x0 = x1;
            f0 = f1;
            x1 = x2;
            f1 = f2;
        }
    }

    res.status = RootStatus::found;
    res.root = best;
    res.residual = std::abs(best_f);
    res.lo = a;
    res.hi = b;
    return res;
}

int default_scan_n() {
    if (const char* env = std::getenv("STARLIKE_RADIUS_SCAN_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return std::max(64, int(std::min(v, 1000000L)));
    }
    return 4096;
}

}  // namespace starlike
