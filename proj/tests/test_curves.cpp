#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curves.hpp"
#include "errors.hpp"

using namespace hilbnef;

TEST_CASE("genus bookkeeping") {
    CHECK(genus(GenusProfile::smooth(5)) == 6);
    CHECK(genus(GenusProfile::node(5)) == 5);
    CHECK(genus(GenusProfile::ordinary(5, 3)) == 3);
    CHECK(genus(GenusProfile::smooth(4)) == 3);
}

TEST_CASE("ramification degrees via Riemann-Hurwitz") {
    CHECK(ramification_degree(genus(GenusProfile::node(5)), 3) == 14);
    CHECK(ramification_degree(genus(GenusProfile::smooth(5)), 4) == 18);
    CHECK(ramification_degree(genus(GenusProfile::ordinary(5, 3)), 2) == 8);
}

TEST_CASE("res_gamma catalog values") {
    CurveClass c6 = make_curve(CurveName::ResGamma, 6, 4);
    CHECK(c6.h == 6);
    CHECK(c6.b == 24);
    // closed form d^2-d-6 equals the Riemann-Hurwitz computation, d = 5..40
    for (long d = 5; d <= 40; ++d) {
        CurveClass c = make_curve(CurveName::ResGamma, d, d - 2);
        CHECK(c.h == d);
        CHECK(c.b == d * d - d - 6);
        CHECK(c.b == ramification_degree(genus(GenusProfile::node(d)), d - 2));
    }
}

TEST_CASE("omega catalog values") {
    CurveClass o = make_curve(CurveName::Omega, 5, 2, 3);
    CHECK(o.h == 5);
    CHECK(o.b == 8);
    CHECK(slope_bound_from_curve(o) == Rational(4, 5));
    for (long d = 5; d <= 14; ++d) {
        for (long r = 3; r <= d - 2; ++r) {
            CurveClass c = make_curve(CurveName::Omega, d, d - r, r);
            CHECK(c.b == d * d - d - r * r - r);
            CHECK(c.b == ramification_degree(genus(GenusProfile::ordinary(d, r)), d - r));
        }
    }
}

TEST_CASE("quartic boundary cross-check: res_gamma at d = 4 gives slope 3/4") {
    CurveClass c = make_curve(CurveName::ResGamma, 4, 2);
    CHECK(c.h == 4);
    CHECK(c.b == 6);
    CHECK(slope_bound_from_curve(c) == Rational(3, 4));
}

TEST_CASE("the r = 2 specialization of the flex formula is the nodal formula") {
    // formula identity only: construction still requires r >= 3
    for (long d = 5; d <= 20; ++d) {
        long r = 2;
        CHECK(ramification_degree(genus(GenusProfile::ordinary(d, r)), d - r) == d * d - d - 6);
        CHECK(d * d - d - r * r - r == d * d - d - 6);
    }
    CHECK_THROWS_AS(make_curve(CurveName::Omega, 7, 5, 2), DomainError);
}

TEST_CASE("res_psi catalog values") {
    CurveClass c = make_curve(CurveName::ResPsi, 5, 3);
    CHECK(c.h == 15);
    CHECK(c.b == 36); // (d-3)(d^2-d-2) at d = 5
    for (long d = 5; d <= 20; ++d) {
        CurveClass cd = make_curve(CurveName::ResPsi, d, d - 2);
        CHECK(cd.h == d * (d - 2));
        CHECK(cd.b == (d - 3) * (d * d - d - 2));
    }
}

TEST_CASE("line curve and fiber curve") {
    CurveClass line = make_curve(CurveName::LineCurve, 3, 4);
    CHECK(line.h == 1);
    CHECK(line.b == 6);
    // orthogonal to (n-1)H - 1/2 B by construction
    CHECK(pair(NSClass{Rational(3), Rational(1), 4, 3}, line) == 0);

    CurveClass fiber = make_curve(CurveName::Fiber, 5, 4);
    CHECK(fiber.h == 5);
    CHECK(fiber.b == 18);
    CHECK(slope_bound_from_curve(fiber) == Rational(9, 5));
    for (long d = 4; d <= 12; ++d)
        for (long n = d - 1; n <= d + 3; ++n)
            CHECK(make_curve(CurveName::Fiber, d, n).b == d * d - 3 * d + 2 * n);
}

TEST_CASE("base curves gamma, phi, psi") {
    CHECK(make_curve(CurveName::Gamma, 7, 3).h == 0);
    CHECK(make_curve(CurveName::Gamma, 7, 3).b == -2);
    CHECK(make_curve(CurveName::Phi, 7, 3).h == 7);
    CHECK(make_curve(CurveName::Phi, 7, 3).b == 0);
    CHECK(make_curve(CurveName::Psi, 7, 3).h == 7);
    CHECK(make_curve(CurveName::Psi, 7, 3).b == 2);
}

TEST_CASE("omega1 is quintic-only") {
    CurveClass o = make_curve(CurveName::Omega1, 5, 2);
    CHECK(o.h == 10);
    CHECK(o.b == 14);
    CHECK_THROWS_AS(make_curve(CurveName::Omega1, 6, 2), DomainError);
    CHECK_THROWS_AS(make_curve(CurveName::Omega1, 5, 3), DomainError);
}

TEST_CASE("parameter constraints") {
    CHECK_THROWS_AS(make_curve(CurveName::ResGamma, 5, 2), DomainError);  // n != d-2
    CHECK_THROWS_AS(make_curve(CurveName::ResGamma, 3, 1), DomainError);
    CHECK_THROWS_AS(make_curve(CurveName::ResPsi, 4, 2), DomainError);    // needs d >= 5
    CHECK_THROWS_AS(make_curve(CurveName::Omega, 5, 2, 4), DomainError);  // n != d-r
    CHECK_THROWS_AS(make_curve(CurveName::Fiber, 5, 3), DomainError);     // needs n >= d-1
    CHECK_THROWS_AS(make_curve(CurveName::Omega, 4, 2, 3), DomainError);  // hmm: d-r = 1 < 2
}

TEST_CASE("curve table contents") {
    auto table = curve_table(5, 3, false);
    // gamma, phi, psi, res_gamma, res_psi
    CHECK(table.size() == 5);
    auto quintic2 = curve_table(5, 2, false);
    bool has_omega1 = false, has_omega = false;
    for (const auto& c : quintic2) {
        if (c.name == "omega1") has_omega1 = true;
        if (c.name == "omega") has_omega = true;
    }
    CHECK(has_omega1);
    CHECK(has_omega);
    auto line_table = curve_table(3, 2, true);
    CHECK(line_table.back().name == "line_curve");
}

TEST_CASE("curve names round-trip") {
    for (auto name : {CurveName::Gamma, CurveName::Phi, CurveName::Psi, CurveName::ResGamma,
                      CurveName::ResPsi, CurveName::Omega, CurveName::Omega1, CurveName::LineCurve,
                      CurveName::Fiber})
        CHECK(curve_name_from_string(to_string(name)) == name);
    CHECK_THROWS_AS(curve_name_from_string("nope"), DomainError);
}
