#include "starlike/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace starlike {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.414213562373095048801688724209698079;

using cplx = std::complex<double>;

// One Horner pass yielding p(z) and p'(z) together, no scratch polynomial.
void eval_with_deriv(const std::vector<double>& c, cplx z, cplx& v, cplx& dv) {
    v = 0.0;
    dv = 0.0;
    for (size_t k = c.size(); k-- > 0;) {
        dv = dv * z + v;
        v = v * z + c[k];
    }
}

int vanishing_order(const Polynomial& p) {
    int k = 0;
    for (double c : p.coeffs) {
        if (c != 0.0) break;
        ++k;
    }
    return k;
}

}  // namespace

cplx RationalFunction::operator()(cplx z) const { return num(z) / den(z); }

cplx RationalFunction::log_deriv(cplx z) const {
    if (z == 0.0) {
        // z f'/f -> ord_0(num) - ord_0(den); 1 for a normalized extremal.
        return double(vanishing_order(num) - vanishing_order(den));
    }
    cplx nv, dnv, dv, ddv;
    eval_with_deriv(num.coeffs, z, nv, dnv);
    eval_with_deriv(den.coeffs, z, dv, ddv);
    if (nv == 0.0 || dv == 0.0)
        throw std::domain_error("log_deriv: zero or pole at the evaluation point");
    return z * (dnv / nv - ddv / dv);
}

cplx SchwarzBlock::operator()(cplx z) const { return z * (z + a) / (1.0 + a * z); }

cplx SchwarzBlock::deriv(cplx z) const {
    cplx q = 1.0 + a * z;
    if (a == 0.0) return 2.0 * z / (q * q);
    double s2 = 1.0 - a * a;
    if (s2 < 0.0) return (a * z * z + 2.0 * z + a) / (q * q);
    // The numerator a z^2 + 2 z + a has a reciprocal pair of real roots;
    // evaluating it factored avoids the cancellation its Horner form
    // suffers near the double root when |a| is close to 1.
    double z1 = -a / (1.0 + std::sqrt(s2));
    return a * (z - z1) * (z - 1.0 / z1) / (q * q);
}

namespace {

Polynomial product(const std::vector<std::vector<double>>& factors) {
    Polynomial out(std::vector<double>{1.0});
    for (const auto& f : factors) out = out * Polynomial(f);
    return out;
}

// A real quadratic z^2 + qz + 1 keeps both roots on the unit circle iff
// |q| <= 2 (the roots multiply to 1). Past that one root falls inside the
// disk and the printed construction leaves its class.
void require_circle_roots(double q, const char* label) {
    if (std::abs(q) > 2.0) {
        std::ostringstream os;
        os << "printed extremal is invalid here: the factor z^2 + (" << q
           << ")z + 1 vanishes inside the unit disk (|" << label << "| > 2)";
        throw construction_error(os.str());
    }
}

void require_finite_coeffs(const ClassParams& cls) {
    if (std::isnan(cls.b) || std::isnan(cls.c))
        throw construction_error(
            "extremal construction needs the original coefficients b, c; "
            "derived parameters alone fix only |3c+1| and |5b-3c|");
}

// Membership of the constructed pair in its defining class, sampled on a
// 128 x 64 polar grid up to |z| = 0.999.
void validate_membership(const ExtremalPair& ext, Family family) {
    constexpr int kAngles = 128, kRadii = 64;
    for (int i = 1; i <= kRadii; ++i) {
        double rho = 0.999 * i / kRadii;
        for (int j = 0; j < kAngles; ++j) {
            cplx z = std::polar(rho, 2.0 * kPi * j / kAngles);
            cplx fd = ext.f.den(z);
            if (fd == 0.0)
                throw construction_error("extremal denominator vanishes on the validation grid");
            bool ok = true;
            if (family == Family::f3) {
                ok = ((1.0 + z) * ext.f(z) / z).real() > 0.0;
            } else {
                cplx gv = ext.g->num(z) / ext.g->den(z);
                ok = (ext.f(z) / gv).real() > 0.0 && ((1.0 + z) * gv / z).real() > 0.0;
            }
            if (!ok) {
                std::ostringstream os;
                os << "constructed function leaves its class at z = " << z;
                throw construction_error(os.str());
            }
        }
    }
}

}  // namespace

ExtremalPair build_extremal(const ClassParams& cls, ExtremalVariant variant) {
    if (cls.family == Family::f2)
        throw unsupported_error("no extremal function is available for family f2");
    require_finite_coeffs(cls);

    ExtremalPair ext;
    if (cls.family == Family::f3) {
        if (variant != ExtremalVariant::f3_form)
            throw unsupported_error("family f3 has a single extremal form");
        double A3 = 1.0 + 3.0 * cls.b;
        require_circle_roots(A3, "1+3b");
        ext.f.num = product({{0.0, 1.0}, {1.0, A3, 1.0}});
        ext.f.den = product({{1.0, 1.0}, {1.0, 0.0, -1.0}});
        validate_membership(ext, cls.family);
        return ext;
    }

    double A = 5.0 * cls.b - 3.0 * cls.c;
    double B = 3.0 * cls.c + 1.0;
    ext.g.emplace();
    switch (variant) {
        case ExtremalVariant::left_contact:
            require_circle_roots(-A, "5b-3c");
            require_circle_roots(-B, "3c+1");
            ext.f.num = product({{0.0, 1.0}, {1.0, -2.0, 1.0}, {1.0, 1.0}});
            ext.f.den = product({{1.0, -A, 1.0}, {1.0, -B, 1.0}});
            ext.g->num = Polynomial({0.0, 1.0, -1.0});
            ext.g->den = Polynomial({1.0, -B, 1.0});
            break;
        case ExtremalVariant::right_contact:
            require_circle_roots(A, "5b-3c");
            require_circle_roots(B, "3c+1");
            ext.f.num = product({{0.0, 1.0}, {1.0, A, 1.0}, {1.0, B, 1.0}});
            ext.f.den = product({{1.0, 0.0, -1.0}, {1.0, 0.0, -1.0}, {1.0, 1.0}});
            ext.g->num = product({{0.0, 1.0}, {1.0, B, 1.0}});
            ext.g->den = product({{1.0, 0.0, -1.0}, {1.0, 1.0}});
            break;
        case ExtremalVariant::f3_form:
            throw unsupported_error("the f3 extremal form needs family f3");
    }
    validate_membership(ext, cls.family);
    return ext;
}

ExtremalPair build_extremal(const ClassParams& cls) {
    switch (cls.family) {
        case Family::f1:
            return build_extremal(cls, ExtremalVariant::left_contact);
        case Family::f3:
            return build_extremal(cls, ExtremalVariant::f3_form);
        default:
            throw unsupported_error("no extremal function is available for family f2");
    }
}

double brute_radius(const RationalFunction& f, const RegionSpec& region,
                    double r_tol, int n_theta, int n_rad) {
    if (!(r_tol > 0.0) || r_tol >= 1.0)
        throw std::invalid_argument("brute_radius: r_tol must lie in (0, 1)");
    if (n_theta < 8 || n_rad < 1)
        throw std::invalid_argument("brute_radius: grid too coarse");

    // A sample that lands on (or numerically indistinguishably near) the
    // region boundary gets nudged inward a little before giving up.
    auto sample_ok = [&](double rho, double theta) {
        for (int attempt = 0; attempt < 3; ++attempt) {
            try {
                return contains(region, f.log_deriv(std::polar(rho, theta)));
            } catch (const boundary_indeterminate&) {
                rho *= 1.0 - 1e-7;
            }
        }
        throw std::runtime_error("brute_radius: persistent boundary indeterminacy");
    };
    // Outermost ring first: the image escapes there soonest.
    auto disk_ok = [&](double r) {
        for (int k = n_rad; k >= 1; --k) {
            double rho = r * k / n_rad;
            for (int j = 0; j < n_theta; ++j)
                if (!sample_ok(rho, 2.0 * kPi * j / n_theta)) return false;
        }
        return true;
    };

    double lo = 0.0, hi = 1.0 - 1e-6;
    if (!disk_ok(1e-6)) return 0.0;
    if (disk_ok(hi)) return hi;
    while (hi - lo > r_tol) {
        double mid = 0.5 * (lo + hi);
        (disk_ok(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

enum class Functional { re_w, lemniscate, parabola, log_mod, modulus, lune, sigmoid };

struct ContactPlan {
    ExtremalVariant variant;
    double sign;
    Functional functional;
    double target;
    const char* name;
};

std::optional<ContactPlan> contact_plan(Family family, const RegionSpec& region) {
    using V = ExtremalVariant;
    using F = Functional;
    if (family == Family::f1) {
        switch (region.kind) {
            case Region::half_plane:
                return ContactPlan{V::left_contact, +1.0, F::re_w, region.alpha, "Re w"};
            case Region::lemniscate:
                return ContactPlan{V::right_contact, -1.0, F::lemniscate, 1.0, "|w^2 - 1|"};
            case Region::parabola:
                return ContactPlan{V::left_contact, +1.0, F::parabola, 0.0, "Re w - |w - 1|"};
            case Region::exponential:
                return ContactPlan{V::left_contact, +1.0, F::log_mod, 1.0, "|log w|"};
            case Region::cardioid:
                return ContactPlan{V::left_contact, +1.0, F::modulus, 1.0 / 3.0, "|w|"};
            case Region::sine:
                return ContactPlan{V::right_contact, -1.0, F::modulus, 1.0 + std::sin(1.0), "|w|"};
            case Region::lune:
                return ContactPlan{V::left_contact, +1.0, F::lune, 0.0, "|w^2 - 1| - 2|w|"};
            case Region::rational_r:
                return ContactPlan{V::left_contact, +1.0, F::modulus, 2.0 * (kSqrt2 - 1.0), "|w|"};
            case Region::nephroid:
                return ContactPlan{V::right_contact, -1.0, F::modulus, 5.0 / 3.0, "|w|"};
            case Region::sigmoid:
                return ContactPlan{V::right_contact, -1.0, F::sigmoid, 1.0, "|log(w/(2-w))|"};
            default:
                return std::nullopt;  // rational_rl, sector: no sharpness computation
        }
    }
    if (family == Family::f3 && region.kind == Region::lemniscate)
        return ContactPlan{V::f3_form, -1.0, F::lemniscate, 1.0, "|w^2 - 1|"};
    return std::nullopt;
}

double evaluate_functional(Functional f, cplx w) {
    switch (f) {
        case Functional::re_w:
            return w.real();
        case Functional::lemniscate:
            return std::abs(w * w - 1.0);
        case Functional::parabola:
            return w.real() - std::abs(w - 1.0);
        case Functional::log_mod:
            return std::abs(std::log(w));
        case Functional::modulus:
            return std::abs(w);
        case Functional::lune:
            return std::abs(w * w - 1.0) - 2.0 * std::abs(w);
        case Functional::sigmoid:
            return std::abs(std::log(w / (2.0 - w)));
    }
    return 0.0;
}

}  // namespace

SharpnessReport verify_sharpness(const ClassParams& cls, const RegionSpec& region,
                                 double r_star) {
    SharpnessReport rep;
    rep.r_star = r_star;
    if (cls.family == Family::f2) {
        rep.status = SharpnessReport::Status::no_extremal;
        rep.functional = "no extremal function available";
        return rep;
    }
    auto plan = contact_plan(cls.family, region);
    if (!plan) {
        rep.status = SharpnessReport::Status::no_claim;
        rep.functional = "no sharpness claim for this pair";
        return rep;
    }
    ExtremalPair ext = build_extremal(cls, plan->variant);
    rep.status = SharpnessReport::Status::checked;
    rep.claimed = sharpness_claimed(cls.family, region.kind);
    rep.z_sign = plan->sign;
    rep.w = ext.f.log_deriv(plan->sign * r_star);
    rep.contact = evaluate_functional(plan->functional, rep.w);
    rep.target = plan->target;
    rep.abs_err = std::abs(rep.contact - rep.target);
    rep.functional = plan->name;
    return rep;
}

double lemma1_check(double b_lemma, double alpha, int n_samples) {
    if (!(std::abs(b_lemma) <= 1.0))
        throw std::domain_error("lemma1_check: need |b| <= 1");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("lemma1_check: need 0 <= alpha < 1");
    if (n_samples < 1) throw std::domain_error("lemma1_check: need n_samples >= 1");

    double bb = std::abs(b_lemma);
    double u = 1.0 - 2.0 * alpha;

    int nr = std::max(1, int(std::sqrt(double(n_samples))));
    int nt = std::max(1, n_samples / nr);
    double worst = 0.0;
    for (int i = 1; i <= nr; ++i) {
        double r = 0.999 * i / nr;
        double bound = 2.0 * (1.0 - alpha) * r / ((1.0 - r) * (1.0 + r)) *
                       (bb * r * r + 2.0 * r + bb) /
                       (u * r * r + 2.0 * (1.0 - alpha) * bb * r + 1.0);
        double sg = (b_lemma < 0.0) ? -1.0 : 1.0;
        for (int j = 0; j < nt; ++j) {
            cplx z = std::polar(r, 2.0 * kPi * j / nt);
            // zp'/p for p = (1 + u w)/(1 - w), w = z(z+b)/(1+bz). In terms
            // of the block, 1 - w = (1-z)(1+z)/(1+bz), 1 + uw = nu/(1+bz)
            // and w' = q/(1+bz)^2. The quadratics q and nu are regrouped
            // about z = -sign(b), where their plain Horner forms cancel
            // catastrophically right at the equality angle of the bound.
            cplx zs = 1.0 + sg * z;
            cplx den = 1.0 + b_lemma * z;
            cplx q = b_lemma * zs * zs + 2.0 * (1.0 - bb) * z;
            cplx nu = u * zs * zs + (b_lemma * (1.0 + u) - 2.0 * sg * u) * z + (1.0 - u);
            double val = std::abs(z * q / den * (u / nu + 1.0 / ((1.0 - z) * (1.0 + z))));
            worst = std::max(worst, val - bound);
        }
    }
    return std::max(worst, 0.0);
}

}  // namespace starlike
