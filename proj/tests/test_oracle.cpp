#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "errors.hpp"
#include "oracle.hpp"
#include "resultant.hpp"

#include <random>

using namespace hilbnef;

namespace {

const ProjectivePoint kOrigin = ProjectivePoint::make({Rational(0), Rational(0), Rational(1)});

MultiPoly plane(const std::string& text) { return parse_poly(text, plane_vars()); }

// Explicit instances with center-only singularities and squarefree pencil
// discriminants (independently verified with a computer algebra system).
const char* kNodalQuintic = "y^2 - x^2 + x^3 + x^5 + y^5";
const char* kTripleQuintic = "x^3 + y^3 + x^4 + x^5 + y^5";
const char* kSmoothQuintic = "x + x^2 + y^3 + x^5 + y^5";

// Frozen discriminants of the primary pencil chart for the instances above
// (computed independently; the oracle must reproduce them exactly).
const char* kNodalDisc =
    "-27*t^14 + 54*t^12 - 27*t^10 - 54*t^9 + 108*t^7 - 58*t^5 - 27*t^4 + 54*t^2 - 31";
const char* kTripleDisc = "-4*t^8 - 4*t^5 - 4*t^3 - 3";

MultiPoly substituted(const MultiPoly& curve, const std::vector<std::vector<Rational>>& cols) {
    const VarList& vars = curve.vars();
    std::vector<MultiPoly> images;
    for (std::size_t row = 0; row < 3; ++row) {
        MultiPoly lin(vars);
        for (std::size_t col = 0; col < 3; ++col)
            if (cols[col][row] != 0)
                lin += MultiPoly::variable(vars, vars[col]).scaled(cols[col][row]);
        images.push_back(lin);
    }
    MultiPoly out(vars);
    for (const auto& [e, c] : curve.terms()) {
        MultiPoly term = MultiPoly::constant(vars, c);
        for (std::size_t i = 0; i < 3; ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        out += term;
    }
    return out;
}

} // namespace

TEST_CASE("residual degrees") {
    PencilProjection nodal = make_pencil(plane(kNodalQuintic), kOrigin);
    CHECK(nodal.degree == 5);
    CHECK(nodal.multiplicity == 2);
    CHECK(nodal.residual_degree == 3);

    PencilProjection triple = make_pencil(plane(kTripleQuintic), kOrigin);
    CHECK(triple.multiplicity == 3);
    CHECK(triple.residual_degree == 2);

    ResidualForm forms = residual_form(nodal);
    CHECK(forms.primary.degree_in("s").value_or(-1) == 3);
    auto su_degree = [](const MultiPoly& f) {
        long best = 0;
        for (const auto& [e, c] : f.terms()) best = std::max(best, long(e[0]) + long(e[1]));
        return best;
    };
    CHECK(su_degree(forms.primary) == 3); // homogeneous of degree d - m in (s, u)
    CHECK(su_degree(forms.reversed) == 3);
}

TEST_CASE("off-curve centers are rejected") {
    MultiPoly conic = plane("x^2 + y^2 - z^2");
    CHECK_THROWS_WITH_AS(
        (void)make_pencil(conic, kOrigin),
        doctest::Contains("multiplicity 0"), DomainError);
}

TEST_CASE("a cone over the center has nothing to spin") {
    CHECK_THROWS_WITH_AS((void)make_pencil(plane("x^5 + y^5"), kOrigin),
                         doctest::Contains("nothing to spin"), DomainError);
}

TEST_CASE("nodal quintic: 14 branch points, squarefree discriminant") {
    BranchCount bc = branch_count(make_pencil(plane(kNodalQuintic), kOrigin));
    CHECK(bc.count == 14);
    CHECK(bc.squarefree);
    CHECK(bc.disc_degree == 14);
    CHECK(bc.infinity_order == 0);
    CHECK(bc.disc == parse_poly(kNodalDisc, VarList{"s", "u", "t"}));
    CHECK(bc.count == ramification_degree(genus(GenusProfile::node(5)), 3));
}

TEST_CASE("triple-point quintic: 8 branch points, squarefree discriminant") {
    BranchCount bc = branch_count(make_pencil(plane(kTripleQuintic), kOrigin));
    CHECK(bc.count == 8);
    CHECK(bc.squarefree);
    CHECK(bc.disc == parse_poly(kTripleDisc, VarList{"s", "u", "t"}));
    CHECK(bc.count == ramification_degree(genus(GenusProfile::ordinary(5, 3)), 2));
}

TEST_CASE("smooth quintic from a point on it: 18 branch points") {
    BranchCount bc = branch_count(make_pencil(plane(kSmoothQuintic), kOrigin));
    CHECK(bc.count == 18);
    CHECK(bc.squarefree);
    CHECK(bc.disc_degree == 17);
    CHECK(bc.infinity_order == 1); // the line x = 0 is a simple branch line here
    CHECK(bc.count == ramification_degree(genus(GenusProfile::smooth(5)), 4));
}

TEST_CASE("oracle discriminant agrees with the Sylvester univariate discriminant") {
    // dual route: the binary-form discriminant of the residual family equals
    // the univariate discriminant of its u = 1 dehomogenization
    for (const char* curve : {kNodalQuintic, kTripleQuintic}) {
        PencilProjection pencil = make_pencil(plane(curve), kOrigin);
        BranchCount bc = branch_count(pencil);
        MultiPoly dehom = residual_form(pencil).primary.substitute("u", Rational(1));
        CHECK(discriminant(dehom, "s") == bc.disc);
    }
}

TEST_CASE("oracle report against genus profiles") {
    OracleReport nodal = oracle_ramification(plane(kNodalQuintic), kOrigin,
                                             GenusProfile::node(5));
    CHECK(nodal.predicted == 14);
    CHECK(nodal.verdict == "match");

    OracleReport triple = oracle_ramification(plane(kTripleQuintic), kOrigin,
                                              GenusProfile::ordinary(5, 3));
    CHECK(triple.predicted == 8);
    CHECK(triple.verdict == "match");

    OracleReport smooth = oracle_ramification(plane(kSmoothQuintic), kOrigin,
                                              GenusProfile::smooth(5));
    CHECK(smooth.predicted == 18);
    CHECK(smooth.verdict == "match");

    // claiming the wrong profile is reported, not absorbed
    OracleReport wrong = oracle_ramification(plane(kNodalQuintic), kOrigin,
                                             GenusProfile::ordinary(5, 3));
    CHECK(wrong.verdict != "match");
}

TEST_CASE("non-ordinary center is reported") {
    // tangent cone (x + y)^2 is a double line
    OracleReport cusp = oracle_ramification(plane("(x+y)^2 + x^3 + y^5"), kOrigin,
                                            GenusProfile::node(5));
    CHECK(cusp.verdict == "center singularity is not ordinary (tangent cone not squarefree)");
}

TEST_CASE("degenerate detection: a pencil line on the curve") {
    // both symmetric sample quintics contain the line x + y = 0 through the
    // center, so the pencil is degenerate there
    CHECK_THROWS_WITH_AS((void)branch_count(make_pencil(plane("y^2 - x^2 + x^5 + y^5"), kOrigin)),
                         doctest::Contains("pencil line"), DomainError);
    CHECK_THROWS_WITH_AS((void)branch_count(make_pencil(plane("x^3 + y^3 + x^5 + y^5"), kOrigin)),
                         doctest::Contains("pencil line"), DomainError);
    CHECK_THROWS_WITH_AS(
        (void)branch_count(make_pencil(plane("(x + y)*(x^4 + y^4 + z^4)"), kOrigin)),
        doctest::Contains("pencil line"), DomainError);
}

TEST_CASE("degenerate detection: repeated component forces disc == 0") {
    MultiPoly doubled = plane("(x^2 + y*z)^2*(x + y + z)");
    CHECK_THROWS_WITH_AS((void)branch_count(make_pencil(doubled, kOrigin)),
                         doctest::Contains("repeated"), DomainError);
}

TEST_CASE("degree-1 residual has no branching") {
    // quartic with an ordinary triple point: the projection has degree 1
    BranchCount bc = branch_count(make_pencil(plane("x^3 + y^3 + x^4"), kOrigin));
    CHECK(bc.count == 0);
    CHECK(bc.squarefree);
    CHECK(0 == ramification_degree(genus(GenusProfile::ordinary(4, 3)), 1));
}

TEST_CASE("center away from the origin is moved correctly") {
    // C2(x, y, z) = C(x - z, y - 2z, z) has the nodal center at [1:2:1]
    MultiPoly c = plane(kNodalQuintic);
    MultiPoly c_hom = make_pencil(c, kOrigin).curve;
    MultiPoly xz = plane("x - z");
    MultiPoly y2z = plane("y - 2*z");
    MultiPoly c2 = c_hom.substitute("x", xz).substitute("y", y2z);
    ProjectivePoint center = ProjectivePoint::make({Rational(1), Rational(2), Rational(1)});
    BranchCount bc = branch_count(make_pencil(c2, center));
    CHECK(bc.count == 14);
    CHECK(bc.squarefree);
}

TEST_CASE("property: branch count is invariant under coordinate changes fixing the center") {
    std::mt19937 rng(86);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> nonzero(1, 3);
    MultiPoly c = make_pencil(plane(kNodalQuintic), kOrigin).curve;
    int done = 0;
    while (done < 12) {
        // third column (0, 0, c33): the change fixes [0:0:1]
        std::vector<std::vector<Rational>> cols(3, std::vector<Rational>(3, Rational(0)));
        cols[0] = {Rational(entry(rng)), Rational(entry(rng)), Rational(entry(rng))};
        cols[1] = {Rational(entry(rng)), Rational(entry(rng)), Rational(entry(rng))};
        cols[2] = {Rational(0), Rational(0), Rational(nonzero(rng))};
        Rational det = cols[0][0] * cols[1][1] - cols[0][1] * cols[1][0];
        if (det == 0) continue;
        MultiPoly moved = substituted(c, cols);
        BranchCount bc = branch_count(make_pencil(moved, kOrigin));
        CHECK(bc.count == 14);
        ++done;
    }
}

TEST_CASE("property: exchanging the pencil charts preserves the count") {
    // swapping x and y swaps the two charts
    for (const char* curve : {kNodalQuintic, kTripleQuintic, kSmoothQuintic}) {
        MultiPoly c = plane(curve);
        std::vector<std::vector<Rational>> swap_xy(3, std::vector<Rational>(3, Rational(0)));
        swap_xy[0][1] = 1; // x -> y
        swap_xy[1][0] = 1; // y -> x
        swap_xy[2][2] = 1;
        MultiPoly swapped = substituted(make_pencil(c, kOrigin).curve, swap_xy);
        CHECK(branch_count(make_pencil(c, kOrigin)).count ==
              branch_count(make_pencil(swapped, kOrigin)).count);
    }
}

TEST_CASE("homogeneous input with explicit z is accepted") {
    MultiPoly tern = plane("x^5 + x^3*z^2 - x^2*z^3 + y^5 + y^2*z^3");
    CHECK(branch_count(make_pencil(tern, kOrigin)).count == 14);
    // inhomogeneous input that uses z is rejected
    CHECK_THROWS_AS((void)make_pencil(plane("x^2 + z^3"), kOrigin), DomainError);
}
