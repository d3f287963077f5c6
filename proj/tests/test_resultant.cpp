#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "errors.hpp"
#include "multipoly.hpp"
#include "resultant.hpp"

#include <random>

using namespace hilbnef;

namespace {
const VarList kXT{"x", "t"};
const VarList kX{"x"};

MultiPoly random_univariate(std::mt19937& rng, const VarList& vars, const std::string& var,
                            int max_deg, bool force_nonzero = true) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> degd(0, max_deg);
    MultiPoly x = MultiPoly::variable(vars, var);
    MultiPoly p(vars);
    int deg = degd(rng);
    for (int k = 0; k <= deg; ++k) p += x.pow(k).scaled(Rational(coeff(rng)));
    if (force_nonzero && p.is_zero()) p = x + MultiPoly::constant(vars, 1);
    return p;
}
} // namespace

TEST_CASE("exact division") {
    MultiPoly a = parse_poly("x^2 - y^2", VarList{"x", "y"});
    MultiPoly b = parse_poly("x - y", VarList{"x", "y"});
    CHECK(divide_exact(a, b) == parse_poly("x + y", VarList{"x", "y"}));
    CHECK_THROWS_AS(divide_exact(parse_poly("x^2 + 1", kX), parse_poly("x + 1", kX)), DomainError);
}

TEST_CASE("resultant: evaluation case res_x(x^2 - t, x - 1) = 1 - t") {
    MultiPoly f = parse_poly("x^2 - t", kXT);
    MultiPoly g = parse_poly("x - 1", kXT);
    CHECK(resultant(f, g, "x") == parse_poly("1 - t", kXT));
}

TEST_CASE("resultant: common factor gives zero") {
    MultiPoly f = parse_poly("x^3 + 2*x - 1", kX);
    CHECK(resultant(f, f, "x").is_zero());
    MultiPoly g = parse_poly("(x - 1)*(x + 2)", kX);
    MultiPoly h = parse_poly("(x - 1)*(x - 3)", kX);
    CHECK(resultant(g, h, "x").is_zero());
}

TEST_CASE("resultant rejects degree-zero input in the variable") {
    CHECK_THROWS_AS(resultant(parse_poly("t", kXT), parse_poly("x", kXT), "x"), DomainError);
    CHECK_THROWS_AS(resultant(parse_poly("x", kXT), parse_poly("0", kXT), "x"), DomainError);
}

TEST_CASE("discriminant of the general quadratic is b^2 - 4c") {
    const VarList vars{"x", "b", "c"};
    MultiPoly f = parse_poly("x^2 + b*x + c", vars);
    CHECK(discriminant(f, "x") == parse_poly("b^2 - 4*c", vars));
    CHECK(discriminant(parse_poly("(x-1)^2", kX), "x").is_zero());
    CHECK_THROWS_AS(discriminant(parse_poly("x + 1", kX), "x"), DomainError);
}

TEST_CASE("squarefree detection") {
    const VarList xy{"x", "y"};
    CHECK(is_squarefree(parse_poly("x^3 + y^3", xy)));     // binary form, distinct roots
    CHECK(!is_squarefree(parse_poly("x^2*y", xy)));        // repeated factor x
    CHECK(is_squarefree(parse_poly("x^2 + y^2", xy)));     // roots +-i, distinct
    CHECK(is_squarefree(parse_poly("x^2 + 1", kX)));
    CHECK(!is_squarefree(parse_poly("(x-2)^2*(x+1)", kX)));
    CHECK(is_squarefree(parse_poly("5", kX)));
    CHECK_THROWS_AS(is_squarefree(parse_poly("0", kX)), DomainError);
    // binary form with a doubled root at infinity
    CHECK(!is_squarefree(parse_poly("y^2", xy)));
    CHECK(is_squarefree(parse_poly("x*y", xy)));
    // two variables but inhomogeneous: unsupported
    CHECK_THROWS_AS(is_squarefree(parse_poly("x^2 + y", xy)), DomainError);
}

TEST_CASE("squarefree part") {
    MultiPoly f = parse_poly("(x-1)^2*(x+3)", kX);
    MultiPoly part = squarefree_part(f);
    CHECK(divide_exact(f, part) == parse_poly("x - 1", kX));
    CHECK(is_squarefree(part));
}

TEST_CASE("gcd of univariate polynomials") {
    MultiPoly a = parse_poly("(x-1)*(x-2)", kX);
    MultiPoly b = parse_poly("(x-1)*(x+5)", kX);
    CHECK(gcd_univariate(a, b) == parse_poly("x - 1", kX));
    CHECK(gcd_univariate(a, parse_poly("7", kX)).is_constant());
}

TEST_CASE("property: res(f, g*h) = res(f,g)*res(f,h)") {
    std::mt19937 rng(424242);
    int done = 0;
    while (done < 210) {
        MultiPoly f = random_univariate(rng, kXT, "x", 4);
        MultiPoly g = random_univariate(rng, kXT, "x", 3);
        MultiPoly h = random_univariate(rng, kXT, "x", 3);
        if (f.degree_in("x").value_or(0) < 1 || g.degree_in("x").value_or(0) < 1 ||
            h.degree_in("x").value_or(0) < 1)
            continue;
        CHECK(resultant(f, g * h, "x") == resultant(f, g, "x") * resultant(f, h, "x"));
        ++done;
    }
}

TEST_CASE("property: resultant commutes with specialization when lc survives") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> pt(-4, 4);
    int done = 0;
    while (done < 210) {
        // f, g in x with coefficients involving the parameter t
        std::uniform_int_distribution<int> coeff(-5, 5);
        MultiPoly t = MultiPoly::variable(kXT, "t");
        MultiPoly x = MultiPoly::variable(kXT, "x");
        auto random_param_poly = [&](int dx, int dt) {
            MultiPoly p(kXT);
            for (int i = 0; i <= dx; ++i)
                for (int j = 0; j <= dt; ++j)
                    p += x.pow(i) * t.pow(j).scaled(Rational(coeff(rng)));
            return p;
        };
        MultiPoly f = random_param_poly(3, 2);
        MultiPoly g = random_param_poly(2, 2);
        if (f.degree_in("x").value_or(0) < 1 || g.degree_in("x").value_or(0) < 1) continue;
        Rational t0(pt(rng));
        MultiPoly f0 = f.substitute("t", t0);
        MultiPoly g0 = g.substitute("t", t0);
        // specialization must preserve both leading coefficients
        if (f0.degree_in("x") != f.degree_in("x") || g0.degree_in("x") != g.degree_in("x")) continue;
        MultiPoly res_then_eval = resultant(f, g, "x").substitute("t", t0);
        MultiPoly eval_then_res = resultant(f0, g0, "x");
        CHECK(res_then_eval == eval_then_res);
        ++done;
    }
}

TEST_CASE("property: is_squarefree(f) iff disc(f) != 0, univariate degree <= 8") {
    std::mt19937 rng(90125);
    std::uniform_int_distribution<int> make_square(0, 2);
    int done = 0;
    while (done < 220) {
        MultiPoly f = random_univariate(rng, kX, "x", 6);
        if (make_square(rng) == 0) {
            MultiPoly lin = random_univariate(rng, kX, "x", 1);
            if (lin.degree_in("x").value_or(0) == 1) f = lin * lin * random_univariate(rng, kX, "x", 2);
        }
        if (f.degree_in("x").value_or(0) < 2 || f.degree_in("x").value_or(0) > 8) continue;
        bool sf = is_squarefree(f);
        bool disc_nonzero = !discriminant(f, "x").is_zero();
        CHECK(sf == disc_nonzero);
        ++done;
    }
}

TEST_CASE("bareiss determinant matches cofactor expansion on small matrices") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> coeff(-4, 4);
    const VarList vars{"a", "b"};
    MultiPoly a = MultiPoly::variable(vars, "a");
    MultiPoly b = MultiPoly::variable(vars, "b");
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3, MultiPoly(vars)));
        for (auto& row : m)
            for (auto& entry : row)
                entry = a.scaled(coeff(rng)) + b.scaled(coeff(rng)) +
                        MultiPoly::constant(vars, coeff(rng));
        MultiPoly det = bareiss_determinant(m);
        MultiPoly expect =
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CHECK(det == expect);
    }
}
