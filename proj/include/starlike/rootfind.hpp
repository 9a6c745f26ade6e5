#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace starlike {

// Real-coefficient polynomial, coefficients stored ascending:
// coeffs[k] multiplies r^k. Degree stays small here (the radius
// equations are degree <= 6), so dense storage is fine.
struct Polynomial {
    std::vector<double> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) {}

    double operator()(double r) const;
    std::complex<double> operator()(std::complex<double> z) const;

    Polynomial derivative() const;

    // Drop trailing coefficients with |c| <= eps so degree() is honest.
    void trim(double eps = 0.0);

    int degree() const { return coeffs.empty() ? -1 : int(coeffs.size()) - 1; }
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double k, const Polynomial& a);
Polynomial operator-(const Polynomial& a, const Polynomial& b);

enum class RootStatus { found, no_root, eval_error };

struct RootResult {
    RootStatus status = RootStatus::no_root;
    double root = 0.0;
    double residual = 0.0;      // |f(root)|
    double lo = 0.0, hi = 0.0;  // final isolating bracket
    double bad_abscissa = 0.0;  // where f turned non-finite (eval_error only)
};

// Smallest zero of a continuous f on [lo, hi]. Scans scan_n+1 equispaced
// points and takes the first sign change (a scan value with |f| <= 1e-14
// is accepted as an exact hit), bisects the bracket to width <= tol, then
// polishes with secant steps clamped to the bracket. A non-finite value at
// any probed abscissa aborts with eval_error.
RootResult smallest_root(const std::function<double(double)>& f,
                         double lo, double hi, int scan_n, double tol);

// Scan resolution used by the radius solvers: 4096 unless the environment
// variable STARLIKE_RADIUS_SCAN_N overrides it (values below 64 are raised
// to 64).
int default_scan_n();

}  // namespace starlike
