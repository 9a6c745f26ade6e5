#include <cmath>
#include <complex>
#include <cstdlib>

#include "doctest.h"
#include "starlike/rootfind.hpp"

using namespace starlike;

TEST_SUITE("rootfind") {

TEST_CASE("polynomial evaluation uses ascending coefficients") {
    Polynomial p({-1.0, 1.0, 5.0, 3.0});  // 3r^3 + 5r^2 + r - 1
    CHECK(std::abs(p(1.0 / 3.0)) <= 1e-15);
    CHECK(Polynomial({-1.0, 0.0, 1.0})(1.0) == 0.0);
    CHECK(Polynomial({2.0})(0.77) == 2.0);
    std::complex<double> i(0.0, 1.0);
    CHECK(std::abs(Polynomial({1.0, 0.0, 1.0})(i)) <= 1e-15);
}

TEST_CASE("polynomial arithmetic") {
    Polynomial prod = Polynomial({1.0, 1.0}) * Polynomial({1.0, -1.0});
    REQUIRE(prod.coeffs.size() == 3);
    CHECK(prod.coeffs[0] == 1.0);
    CHECK(prod.coeffs[1] == 0.0);
    CHECK(prod.coeffs[2] == -1.0);

    Polynomial d = Polynomial({-1.0, 1.0, 5.0, 3.0}).derivative();
    REQUIRE(d.coeffs.size() == 3);
    CHECK(d.coeffs[0] == 1.0);
    CHECK(d.coeffs[1] == 10.0);
    CHECK(d.coeffs[2] == 9.0);

    Polynomial t({0.0, 1e-20, 0.0, 0.0});
    t.trim(1e-13);
    CHECK(t.degree() == 0);
}

TEST_CASE("smallest_root finds the cubic root 1/3") {
    Polynomial p({-1.0, 1.0, 5.0, 3.0});
    auto res = smallest_root([&](double r) { return p(r); }, 0.0, 1.0, 4096, 1e-12);
    REQUIRE(res.status == RootStatus::found);
    CHECK(res.root == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    CHECK(res.lo <= res.root);
    CHECK(res.root <= res.hi);
    CHECK(res.hi - res.lo <= 1e-12);

    double grid_max = 0.0;
    for (int k = 0; k <= 4096; ++k)
        grid_max = std::max(grid_max, std::abs(p(k / 4096.0)));
    CHECK(std::abs(res.residual) <= 1e-9 * std::max(1.0, grid_max));
}

TEST_CASE("the smaller of two roots wins") {
    auto f = [](double r) { return (r - 0.3) * (r - 0.6); };
    auto res = smallest_root(f, 0.0, 1.0, 4096, 1e-12);
    REQUIRE(res.status == RootStatus::found);
    CHECK(res.root == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("no sign change reports no_root") {
    Polynomial p({2.0, -3.0, 1.0});  // roots 1 and 2, none inside [0, 1)
    auto res = smallest_root([&](double r) { return p(r); }, 0.0, 1.0 - 1e-9, 4096, 1e-12);
    CHECK(res.status == RootStatus::no_root);
}

TEST_CASE("non-finite evaluation reports the bad abscissa") {
    auto f = [](double r) { return std::sqrt(r - 0.5); };
    auto res = smallest_root(f, 0.0, 1.0, 64, 1e-12);
    REQUIRE(res.status == RootStatus::eval_error);
    CHECK(res.bad_abscissa == 0.0);
}

TEST_CASE("scan point landing on a root is accepted exactly") {
    auto res = smallest_root([](double r) { return r - 0.5; }, 0.0, 1.0, 2, 1e-12);
    REQUIRE(res.status == RootStatus::found);
    CHECK(res.root == 0.5);
    CHECK(res.residual == 0.0);
}

TEST_CASE("identical inputs give identical output") {
    auto f = [](double r) { return std::cos(3.0 * r) - r; };
    auto a = smallest_root(f, 0.0, 1.0, 512, 1e-12);
    auto b = smallest_root(f, 0.0, 1.0, 512, 1e-12);
    REQUIRE(a.status == RootStatus::found);
    CHECK(a.root == b.root);
    CHECK(a.residual == b.residual);
}

TEST_CASE("scan density from the environment") {
    unsetenv("STARLIKE_RADIUS_SCAN_N");
    CHECK(default_scan_n() == 4096);
    setenv("STARLIKE_RADIUS_SCAN_N", "128", 1);
    CHECK(default_scan_n() == 128);
    setenv("STARLIKE_RADIUS_SCAN_N", "7", 1);
    CHECK(default_scan_n() == 64);
    unsetenv("STARLIKE_RADIUS_SCAN_N");
}

}  // TEST_SUITE
