#include <cmath>
#include <limits>

#include "doctest.h"
#include "starlike/envelope.hpp"

using namespace starlike;

namespace {
const double kSq2 = std::sqrt(2.0);

double crossing(const ClassParams& cls, const RegionSpec& region) {
    auto res = radius_by_crossing(cls, region);
    REQUIRE(res.has_value());
    return res->radius;
}
}  // namespace

TEST_SUITE("envelope") {

TEST_CASE("derived parameters") {
    auto p = derive_params(Family::f1, -1.0, -1.0);
    CHECK(p.cp == 2.0);
    CHECK(p.d == 2.0);
    CHECK(p.warnings.empty());

    p = derive_params(Family::f1, -0.2, -1.0 / 3.0);
    CHECK(std::abs(p.cp) <= 1e-15);
    CHECK(std::abs(p.d) <= 1e-15);

    p = derive_params(Family::f3, -1.0 / 3.0);
    CHECK(std::abs(p.bp) <= 1e-15);

    CHECK_THROWS_AS(derive_params(Family::f1, -1.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(derive_params(Family::f2, 0.0, 1.2), std::domain_error);

    // out-of-range derived parameters warn but stay evaluable
    CHECK_FALSE(derive_params(Family::f1, 1.0, -1.0).warnings.empty());  // d = 8
    CHECK_FALSE(derive_params(Family::f2, 1.0, -1.0).warnings.empty());  // dp = 7
    CHECK_FALSE(derive_params(Family::f2, -0.5, 0.0).warnings.empty());  // dp = 2
    CHECK_FALSE(derive_params(Family::f3, 1.0).warnings.empty());        // bp = 4

    auto q = params_from_derived(Family::f1, 2.0, 2.0);
    CHECK(q.cp == 2.0);
    CHECK(q.d == 2.0);
    CHECK(std::isnan(q.b));
}

TEST_CASE("growth envelope values") {
    auto g = growth(params_from_derived(Family::f1, 0.0, 0.0), 0.5);
    CHECK(g.a == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(g.L == doctest::Approx(2.8).epsilon(1e-14));

    CHECK(growth(params_from_derived(Family::f3, 2.0), 0.5).L ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(growth(params_from_derived(Family::f2, 0.0, 0.0), 0.5).L ==
          doctest::Approx(2.4).epsilon(1e-14));

    CHECK_THROWS_AS(growth(params_from_derived(Family::f1, 0.0, 0.0), 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(growth(params_from_derived(Family::f1, 0.0, 0.0), -0.1),
                    std::domain_error);
}

TEST_CASE("envelope radius grows from zero and blows up near 1") {
    for (Family fam : {Family::f1, Family::f2, Family::f3}) {
        auto cls = params_from_derived(fam, 1.0, 1.0);
        CHECK(growth(cls, 0.0).L == 0.0);
        double prev = 0.0;
        for (double r = 0.05; r < 0.995; r += 0.05) {
            double L = growth(cls, r).L;
            CHECK(L > prev);
            prev = L;
        }
        CHECK(growth(cls, 1.0 - 1e-8).L > 1e6);
    }
}

TEST_CASE("margin anchors") {
    auto f1_22 = params_from_derived(Family::f1, 2.0, 2.0);
    CHECK(std::abs(margin(f1_22, RegionSpec::half_plane(0.0), 0.2)) <= 1e-12);
    CHECK(margin(f1_22, RegionSpec::plain(Region::sine), 0.0) ==
          doctest::Approx(std::sin(1.0)).epsilon(1e-14));
    CHECK(margin(params_from_derived(Family::f3, 2.0),
                 RegionSpec::plain(Region::parabola), 0.1) > 0.0);

    // margin at r = 0 equals the containment threshold at center 1
    for (Region k : kAllRegions) {
        RegionSpec spec = k == Region::sector ? RegionSpec::sector(0.5)
                                              : RegionSpec::plain(k);
        double m0 = margin(f1_22, spec, 0.0);
        CHECK(m0 == doctest::Approx(disk_bound(spec, 1.0)).epsilon(1e-14));
        CHECK(m0 > 0.0);
    }

    // rational-rl margin is the -inf sentinel past its feasibility cap
    CHECK(margin(f1_22, RegionSpec::plain(Region::rational_rl), 0.8) ==
          -std::numeric_limits<double>::infinity());
}

TEST_CASE("crossing radii match the frozen references") {
    struct Row {
        Family fam;
        double x, y;
        RegionSpec spec;
        double want;
    };
    const Row rows[] = {
        {Family::f1, 2, 2, RegionSpec::half_plane(0.0), 0.2},
        {Family::f1, 0, 0, RegionSpec::half_plane(0.0), 0.30777369838722812},
        {Family::f1, 2, 2, RegionSpec::plain(Region::lemniscate), 0.080987551778231528},
        {Family::f1, 2, 2, RegionSpec::plain(Region::parabola), 0.10102051443364377},
        {Family::f1, 2, 2, RegionSpec::plain(Region::rational_rl), 0.05658336481415134},
        {Family::f1, 0, 0, RegionSpec::plain(Region::rational_rl), 0.1321564414282282},
        {Family::f1, 0, 0, RegionSpec::plain(Region::nephroid), 0.21932571765543427},
        {Family::f2, 2, 1, RegionSpec::half_plane(0.0), std::sqrt(5.0) - 2.0},
        {Family::f2, 2, 1, RegionSpec::plain(Region::lemniscate), 0.09778255792239954},
        {Family::f2, 0, 0, RegionSpec::plain(Region::sigmoid), 0.19207349068440577},
        {Family::f3, 2, 0, RegionSpec::half_plane(0.0), 1.0 / 3.0},
        {Family::f3, 0, 0, RegionSpec::half_plane(0.0), kSq2 - 1.0},
        {Family::f3, 2, 0, RegionSpec::plain(Region::lemniscate), 0.13009304312805897},
        {Family::f3, 2, 0, RegionSpec::plain(Region::parabola), 3.0 - 2.0 * kSq2},
        {Family::f3, 2, 0, RegionSpec::plain(Region::exponential), 0.21645208828896234},
        {Family::f3, 0, 0, RegionSpec::plain(Region::exponential), 0.3123855461874092},
    };
    for (const Row& row : rows) {
        auto cls = params_from_derived(row.fam, row.x, row.y);
        auto res = radius_by_crossing(cls, row.spec);
        REQUIRE(res.has_value());
        CAPTURE(family_name(row.fam));
        CAPTURE(region_name(row.spec.kind));
        CHECK(res->radius == doctest::Approx(row.want).epsilon(1e-10));
        CHECK(std::abs(res->residual) <= 1e-10);
        CHECK(res->lo < res->radius);
        CHECK(res->radius < res->hi);
        CHECK(res->hi - res->lo <= 1e-12);
        CHECK(res->method == SolveMethod::envelope_crossing);
        CHECK_FALSE(res->oracle_radius.has_value());
    }
}

TEST_CASE("sector radius: exact value and half-plane degeneration") {
    auto f1_22 = params_from_derived(Family::f1, 2.0, 2.0);
    // cp = d = 2 collapses both quotient terms to 2, so L = 5 r a and the
    // sector radius is sin(gamma pi/2)/5
    CHECK(crossing(f1_22, RegionSpec::sector(0.5)) ==
          doctest::Approx(std::sin(0.25 * std::acos(-1.0)) / 5.0).epsilon(1e-11));
    CHECK(std::abs(crossing(f1_22, RegionSpec::sector(1.0)) -
                   crossing(f1_22, RegionSpec::half_plane(0.0))) <= 1e-10);
}

TEST_CASE("statement coefficients match the displayed equations") {
    auto se = statement_equation(params_from_derived(Family::f1, 0.0, 0.0),
                                 RegionSpec::half_plane(0.0));
    REQUIRE(se.poly.has_value());
    CHECK(se.poly->coeffs == std::vector<double>{-1, 1, 6, 2, 7, 1});
    CHECK_FALSE(se.flagged);

    se = statement_equation(params_from_derived(Family::f3, 2.0),
                            RegionSpec::half_plane(0.0));
    REQUIRE(se.poly.has_value());
    CHECK(se.poly->coeffs == std::vector<double>{-1, 1, 5, 3});

    se = statement_equation(params_from_derived(Family::f1, 0.0, 0.0),
                            RegionSpec::plain(Region::nephroid));
    REQUIRE(se.poly.has_value());
    CHECK(se.poly->coeffs == std::vector<double>{-2, 3, 25, 6, 32, 3, 5});
}

TEST_CASE("rational-rl statement is a scalar function, not a polynomial") {
    auto cls = params_from_derived(Family::f1, 2.0, 2.0);
    auto se = statement_equation(cls, RegionSpec::plain(Region::rational_rl));
    CHECK_FALSE(se.poly.has_value());
    CHECK(se.scan_hi < std::sqrt(2.0 - kSq2));
    auto viaStatement = radius_by_statement(cls, RegionSpec::plain(Region::rational_rl));
    REQUIRE(viaStatement.has_value());
    CHECK(std::abs(viaStatement->radius - 0.05658336481415134) <= 1e-8);
}

TEST_CASE("statement and crossing agree except on the two flagged pairs") {
    auto f1_22 = params_from_derived(Family::f1, 2.0, 2.0);
    for (Region k : {Region::half_plane, Region::lemniscate, Region::parabola,
                     Region::cardioid, Region::sine, Region::nephroid}) {
        auto viaStatement = radius_by_statement(f1_22, RegionSpec::plain(k));
        REQUIRE(viaStatement.has_value());
        CHECK(std::abs(viaStatement->radius - crossing(f1_22, RegionSpec::plain(k))) <=
              1e-8);
    }

    // f1 / rational-r: printed r^4 coefficient disagrees with the proof
    auto spec_r = RegionSpec::plain(Region::rational_r);
    auto printed = statement_equation(f1_22, spec_r, StatementForm::printed);
    auto proof = statement_equation(f1_22, spec_r, StatementForm::proof);
    CHECK(printed.flagged);
    CHECK_FALSE(proof.flagged);
    double want_r = crossing(f1_22, spec_r);
    CHECK(std::abs(radius_by_statement(f1_22, spec_r, StatementForm::proof)->radius -
                   want_r) <= 1e-8);
    CHECK(std::abs(radius_by_statement(f1_22, spec_r, StatementForm::printed)->radius -
                   want_r) > 1e-8);

    // f2 / lemniscate: printed leading coefficient drops a d' factor, so the
    // forms only part company once d' != 1
    auto f2_22 = params_from_derived(Family::f2, 2.0, 2.0);
    auto spec_l = RegionSpec::plain(Region::lemniscate);
    CHECK(statement_equation(f2_22, spec_l, StatementForm::printed).flagged);
    double want_l = crossing(f2_22, spec_l);
    CHECK(std::abs(radius_by_statement(f2_22, spec_l, StatementForm::proof)->radius -
                   want_l) <= 1e-8);
    CHECK(std::abs(radius_by_statement(f2_22, spec_l, StatementForm::printed)->radius -
                   want_l) > 1e-8);
}

TEST_CASE("generic reconstruction reproduces the proof-form equations") {
    for (auto [x, y] : {std::pair{0.0, 0.0}, {2.0, 2.0}, {1.0, 2.0}}) {
        auto cls = params_from_derived(Family::f1, x, y);
        for (Region k : {Region::half_plane, Region::rational_r, Region::sigmoid}) {
            auto spec = RegionSpec::plain(k);
            if (k == Region::half_plane) spec = RegionSpec::half_plane(0.0);
            Polynomial gen = generic_statement(cls, spec);
            Polynomial stated =
                *statement_equation(cls, spec, StatementForm::proof).poly;
            for (double r : {0.05, 0.2, 0.4, 0.7}) {
                CAPTURE(x);
                CAPTURE(y);
                CAPTURE(region_name(k));
                CHECK(gen(r) == doctest::Approx(stated(r)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("monotone shrinkage in the derived parameters and in alpha") {
    for (Region k : {Region::half_plane, Region::lemniscate, Region::cardioid}) {
        RegionSpec spec =
            k == Region::half_plane ? RegionSpec::half_plane(0.0) : RegionSpec::plain(k);
        for (double d : {0.0, 1.0, 2.0}) {
            double prev = 2.0;
            for (double cp : {0.0, 1.0, 2.0}) {
                double r = crossing(params_from_derived(Family::f1, cp, d), spec);
                CHECK(r <= prev + 1e-12);
                prev = r;
            }
        }
    }
    double prev = 1.0;
    for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
        double r = crossing(params_from_derived(Family::f1, 1.0, 1.0),
                            RegionSpec::half_plane(alpha));
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("unsupported pairs are rejected") {
    auto f3 = params_from_derived(Family::f3, 2.0);
    CHECK_FALSE(region_supported(Family::f3, Region::cardioid));
    CHECK(region_supported(Family::f3, Region::exponential));
    CHECK(supported_regions(Family::f3).size() == 4);
    CHECK(supported_regions(Family::f1).size() == 12);
    CHECK_THROWS_AS(radius_by_crossing(f3, RegionSpec::plain(Region::cardioid)),
                    unsupported_error);
    CHECK_THROWS_AS(statement_equation(f3, RegionSpec::plain(Region::sine)),
                    unsupported_error);
}

TEST_CASE("sharpness claims") {
    CHECK(sharpness_claimed(Family::f1, Region::half_plane));
    CHECK(sharpness_claimed(Family::f1, Region::sigmoid));
    CHECK_FALSE(sharpness_claimed(Family::f1, Region::rational_rl));
    CHECK_FALSE(sharpness_claimed(Family::f1, Region::sector));
    CHECK_FALSE(sharpness_claimed(Family::f2, Region::half_plane));
    CHECK(sharpness_claimed(Family::f3, Region::lemniscate));
    CHECK_FALSE(sharpness_claimed(Family::f3, Region::half_plane));
}

TEST_CASE("family names round-trip") {
    for (Family fam : {Family::f1, Family::f2, Family::f3}) {
        auto back = family_from_name(family_name(fam));
        REQUIRE(back.has_value());
        CHECK(*back == fam);
    }
    CHECK_FALSE(family_from_name("f4").has_value());
}

}  // TEST_SUITE
