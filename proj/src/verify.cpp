#include "verify.hpp"

#include "cone_engine.hpp"
#include "curves.hpp"
#include "errors.hpp"
#include "flex.hpp"
#include "oracle.hpp"
#include "residuation.hpp"
#include "resultant.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace hilbnef {

namespace {

// Accumulates sub-check outcomes for one criterion.
struct Scope {
    bool ok = true;
    long cases = 0;
    std::string first_failure;

    void expect(bool condition, const std::string& label) {
        ++cases;
        if (!condition && ok) {
            ok = false;
            first_failure = label;
        }
    }
};

CheckResult finish(int id, const std::string& name, Scope& s, const std::string& summary) {
    CheckResult r;
    r.id = id;
    r.name = name;
    r.passed = s.ok;
    r.detail = s.ok ? summary + " (" + std::to_string(s.cases) + " sub-checks)"
                    : "failed: " + s.first_failure;
    return r;
}

CheckResult check_curve_table() {
    Scope s;
    for (long d = 5; d <= 40; ++d) {
        CurveClass c = make_curve(CurveName::ResGamma, d, d - 2);
        s.expect(c.h == d, "res_gamma h at d=" + std::to_string(d));
        s.expect(c.b == d * d - d - 6, "res_gamma closed form at d=" + std::to_string(d));
        s.expect(c.b == ramification_degree(genus(GenusProfile::node(d)), d - 2),
                 "res_gamma Riemann-Hurwitz at d=" + std::to_string(d));
    }
    return finish(1, "curve-table reproduction", s, "res_gamma (h,b) = (d, d^2-d-6), d = 5..40");
}

CheckResult check_residuation() {
    Scope s;
    for (long d = 5; d <= 40; ++d) {
        ResiduationMap map = ResiduationMap::for_degree(d);
        NSClass h_img = pullback(map, hilbert_chow_ray(d - 2, d));
        NSClass b_img = pullback(map, nonreduced_locus_class(d - 2, d));
        s.expect(h_img.alpha == d - 1 && h_img.beta == d, "H column at d=" + std::to_string(d));
        s.expect(b_img.alpha == d * d - 3 * d && b_img.beta == d * d - d - 6,
                 "B column at d=" + std::to_string(d));
        NSClass kernel{Rational(d * d - d - 6) / (2 * d), Rational(1), d - 2, d};
        s.expect(pullback(map, kernel).beta == 0, "kernel identity at d=" + std::to_string(d));
        CurveClass gamma2 = make_curve(CurveName::Gamma, d, 2);
        CurveClass psi2 = make_curve(CurveName::Psi, d, 2);
        for (const NSClass& D : {hilbert_chow_ray(d - 2, d), nonreduced_locus_class(d - 2, d)}) {
            s.expect(adjoint_check(map, gamma2, D), "adjoint gamma at d=" + std::to_string(d));
            s.expect(adjoint_check(map, psi2, D), "adjoint psi at d=" + std::to_string(d));
        }
    }
    return finish(2, "residuation identities", s, "columns, kernel, adjoint, d = 5..40");
}

CheckResult check_dispatch_table() {
    Scope s;
    auto slope = [](const ConeSlice& c) { return c.nef_slope ? *c.nef_slope : c.lower_slope; };

    ConeSlice quartic = compute_cone({4, 2, SurfaceKind::NLGeneral, std::nullopt});
    s.expect(quartic.status == ConeStatus::Exact && slope(quartic) == Rational(3, 4),
             "(4,2) exact 3/4");

    ConeSlice q53 = compute_cone({5, 3, SurfaceKind::NLGeneral, std::nullopt});
    s.expect(q53.status == ConeStatus::Exact && slope(q53) == Rational(7, 5), "(5,3) exact 7/5");

    ConeSlice q64 = compute_cone({6, 4, SurfaceKind::NLGeneral, std::nullopt});
    s.expect(q64.status == ConeStatus::Exact && slope(q64) == Rational(2), "(6,4) exact 2");

    ConeSlice flex52 =
        compute_cone({5, 2, SurfaceKind::NLGeneral, FlexData{3, FlexStatus::Ordinary}});
    s.expect(flex52.status == ConeStatus::Exact && slope(flex52) == Rational(4, 5),
             "(5,2)+ordinary-3-flex exact 4/5");

    ConeSlice absent52 =
        compute_cone({5, 2, SurfaceKind::NLGeneral, FlexData{3, FlexStatus::AbsentAll3Flexes}});
    s.expect(absent52.status == ConeStatus::Bounded && absent52.lower_slope == Rational(7, 10) &&
                 absent52.nef_slope == Rational(4, 5) && absent52.nef_slope_strict,
             "(5,2)+absent bounded [7/10, 4/5) strict");

    ConeSlice q54 = compute_cone({5, 4, SurfaceKind::NLGeneral, std::nullopt});
    s.expect(q54.status == ConeStatus::Exact && slope(q54) == Rational(9, 5),
             "(5,4) exact 9/5 via the large-n formula");

    ConeSlice line32 = compute_cone({3, 2, SurfaceKind::ContainsLine, std::nullopt});
    s.expect(line32.status == ConeStatus::SliceExact && slope(line32) == Rational(1),
             "(3,2) contains-line slice-exact at 1");

    ConeSlice q75 = compute_cone({7, 5, SurfaceKind::NLGeneral, std::nullopt});
    s.expect(q75.status == ConeStatus::Bounded && q75.lower_slope == Rational(18, 7) &&
                 !q75.nef_slope.has_value(),
             "(7,5) bounded at 18/7");
    return finish(3, "theorem dispatch table", s, "eight pinned (d,n) cases, exact rationals");
}

// Every dispatchable query with d <= 12 (n <= 2d, all flex variants).
std::vector<ConeQuery> dispatchable_queries() {
    std::vector<ConeQuery> out;
    for (long d = 3; d <= 12; ++d) {
        for (long n = 2; n <= 2 * d; ++n) {
            out.push_back({d, n, SurfaceKind::ContainsLine, std::nullopt});
            if (d < 4) continue;
            out.push_back({d, n, SurfaceKind::NLGeneral, std::nullopt});
            long r = d - n;
            if (r >= 3 && r <= d) {
                out.push_back({d, n, SurfaceKind::NLGeneral, FlexData{r, FlexStatus::Ordinary}});
                out.push_back({d, n, SurfaceKind::NLGeneral, FlexData{r, FlexStatus::Unknown}});
            }
            if (d == 5 && n == 2)
                out.push_back(
                    {d, n, SurfaceKind::NLGeneral, FlexData{3, FlexStatus::AbsentAll3Flexes}});
        }
    }
    return out;
}

CheckResult check_orthogonality() {
    Scope s;
    const Rational eps(1, 1000);
    for (const ConeQuery& q : dispatchable_queries()) {
        ConeSlice cone = compute_cone(q);
        if (cone.status == ConeStatus::Unknown) continue;
        const CurveClass& witness = cone.extremal_witness();
        std::string label = "(d=" + std::to_string(q.d) + ", n=" + std::to_string(q.n) + ")";
        s.expect(pair(NSClass{cone.lower_slope, Rational(1), q.n, q.d}, witness) == 0,
                 "witness pairing nonzero at " + label);
        s.expect(pair(NSClass{cone.lower_slope + eps, Rational(1), q.n, q.d}, witness) > 0,
                 "perturbed pairing not positive at " + label);
    }
    return finish(4, "orthogonality witnesses", s,
                  "pair(slope, witness) = 0 and pair(slope + 1/1000, witness) > 0 on every exact "
                  "or bounded result, d <= 12");
}

CheckResult check_flex_certification() {
    Scope s;
    ProjectivePoint origin =
        ProjectivePoint::make({Rational(0), Rational(0), Rational(0), Rational(1)});
    for (long d = 3; d <= 9; ++d) {
        for (long r = 3; r <= d; ++r) {
            FlexReport xr = flex_check(make_family(FamilyKind::Xdr, d, r), origin, r);
            s.expect(xr.verdict.is_flex && xr.verdict.ordinary && xr.multiplicity == r,
                     "Xdr ordinary flex at (d,r)=(" + std::to_string(d) + "," + std::to_string(r) +
                         ")");
            FlexReport yr = flex_check(make_family(FamilyKind::Yd, d), origin, r);
            s.expect(yr.verdict.is_flex && yr.multiplicity == d,
                     "Yd flex at (d,r)=(" + std::to_string(d) + "," + std::to_string(r) + ")");
        }
        s.expect(y_family_smoothness_certificate(d),
                 "Yd smoothness certificate at d=" + std::to_string(d));
    }
    return finish(5, "flex certification", s,
                  "Xdr ordinary r-flex and Yd r-flex at the base point, 3 <= r <= d <= 9, plus "
                  "the Yd smoothness certificate");
}

CheckResult check_incidence() {
    Scope s;
    IncidenceReport i53 = incidence(5, 3);
    s.expect(i53.N == 56, "N at (5,3)");
    s.expect(i53.dim_sigma == 54, "dim Sigma at (5,3)");
    s.expect(i53.fiber_dim == 49, "fiber dimension at (5,3)");
    s.expect(i53.threshold_ok && i53.d == (i53.r * (i53.r + 1)) / 2 - 1,
             "threshold met with equality at (5,3)");
    s.expect(!incidence(4, 3).threshold_ok, "threshold fails at (4,3)");
    return finish(6, "incidence arithmetic", s, "(5,3): N = 56, dim = 54, threshold equality; "
                                                "(4,3): threshold fails");
}

CheckResult check_oracle() {
    Scope s;
    ProjectivePoint origin = ProjectivePoint::make({Rational(0), Rational(0), Rational(1)});
    struct Instance {
        const char* curve;
        GenusProfile profile;
        long expected;
    };
    const Instance instances[] = {
        {"y^2 - x^2 + x^3 + x^5 + y^5", GenusProfile::node(5), 14},
        {"x^3 + y^3 + x^4 + x^5 + y^5", GenusProfile::ordinary(5, 3), 8},
        {"x + x^2 + y^3 + x^5 + y^5", GenusProfile::smooth(5), 18},
    };
    for (const auto& inst : instances) {
        OracleReport rep =
            oracle_ramification(parse_poly(inst.curve, plane_vars()), origin, inst.profile);
        std::string label = std::string("instance ") + inst.curve;
        s.expect(rep.branches.count == inst.expected, "count at " + label);
        s.expect(rep.branches.squarefree, "squarefree flag at " + label);
        s.expect(rep.predicted == inst.expected, "prediction at " + label);
        s.expect(rep.verdict == "match", "verdict at " + label);
    }
    // catalog b-values reproduced by the oracle at d = 5
    s.expect(make_curve(CurveName::ResGamma, 5, 3).b == 14, "res_gamma b reproduced at d=5");
    s.expect(make_curve(CurveName::Omega, 5, 2, 3).b == 8, "omega b reproduced at d=5");
    return finish(7, "oracle equivalence", s,
                  "branch counts 14 / 8 / 18 by discriminant degree, squarefree flags true");
}

MultiPoly random_poly(std::mt19937& rng, const VarList& vars, int max_terms, unsigned max_exp) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> expd(0, max_exp);
    MultiPoly p(vars);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e(vars.size());
        for (auto& x : e) x = expd(rng);
        p += MultiPoly::monomial(vars, e, Rational(coeff(rng)));
    }
    return p;
}

MultiPoly random_univariate(std::mt19937& rng, const VarList& vars, const std::string& var,
                            int max_deg) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> degd(0, max_deg);
    MultiPoly x = MultiPoly::variable(vars, var);
    MultiPoly p(vars);
    int deg = degd(rng);
    for (int k = 0; k <= deg; ++k) p += x.pow(k).scaled(Rational(coeff(rng)));
    if (p.is_zero()) p = x + MultiPoly::constant(vars, 1);
    return p;
}

CheckResult check_properties() {
    Scope s;
    std::mt19937 rng(20260810);
    const VarList xyz{"x", "y", "z"};
    const VarList kx{"x"};

    // ring axioms and exactness, 200+ randomized triples
    for (int iter = 0; iter < 200; ++iter) {
        MultiPoly f = random_poly(rng, xyz, 5, 4);
        MultiPoly g = random_poly(rng, xyz, 5, 4);
        MultiPoly h = random_poly(rng, xyz, 5, 4);
        s.expect((f + g) + h == f + (g + h), "associativity of +");
        s.expect(f * (g + h) == f * g + f * h, "distributivity");
        s.expect((f * g) * h == f * (g * h), "associativity of *");
        s.expect((f + g) - g == f, "exactness of +/-");
    }

    // resultant multiplicativity and squarefree <-> disc, degrees <= 8
    int done = 0;
    while (done < 200) {
        MultiPoly f = random_univariate(rng, kx, "x", 4);
        MultiPoly g = random_univariate(rng, kx, "x", 3);
        MultiPoly h = random_univariate(rng, kx, "x", 3);
        if (f.degree_in("x").value_or(0) < 1 || g.degree_in("x").value_or(0) < 1 ||
            h.degree_in("x").value_or(0) < 1)
            continue;
        s.expect(resultant(f, g * h, "x") == resultant(f, g, "x") * resultant(f, h, "x"),
                 "resultant multiplicativity");
        MultiPoly fg = f * g;
        if (fg.degree_in("x").value_or(0) >= 2 && fg.degree_in("x").value_or(0) <= 8)
            s.expect(is_squarefree(fg) == !discriminant(fg, "x").is_zero(),
                     "squarefree iff nonzero discriminant");
        ++done;
    }

    // multiplicity additivity and coordinate invariance, 50+ cases
    ProjectivePoint origin{{Rational(0), Rational(0)}};
    const VarList xy{"x", "y"};
    std::uniform_int_distribution<int> entry(-3, 3);
    done = 0;
    while (done < 50) {
        MultiPoly f = random_poly(rng, xy, 4, 3);
        MultiPoly g = random_poly(rng, xy, 4, 3);
        MultiPoly x = MultiPoly::variable(xy, "x");
        MultiPoly y = MultiPoly::variable(xy, "y");
        f = f * x + y.pow(2).scaled(Rational(entry(rng) == 0 ? 1 : entry(rng)));
        g = g * y + x.pow(3).scaled(Rational(entry(rng) == 0 ? 2 : entry(rng)));
        if (f.is_zero() || g.is_zero()) continue;
        long mf, mg;
        try {
            mf = multiplicity_at(f, origin);
            mg = multiplicity_at(g, origin);
        } catch (const DomainError&) {
            continue; // constant term crept in
        }
        s.expect(multiplicity_at(f * g, origin) == mf + mg, "multiplicity additivity");
        long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
        if (a * d - b * c == 0) continue;
        MultiPoly nx = MultiPoly::variable(xy, "x").scaled(Rational(a)) +
                       MultiPoly::variable(xy, "y").scaled(Rational(b));
        MultiPoly ny = MultiPoly::variable(xy, "x").scaled(Rational(c)) +
                       MultiPoly::variable(xy, "y").scaled(Rational(d));
        MultiPoly composed(xy);
        for (const auto& [k, coeff] : f.coefficients_in("x"))
            composed += coeff.substitute("y", ny) * nx.pow(k);
        s.expect(multiplicity_at(composed, origin) == mf, "multiplicity coordinate invariance");
        ++done;
    }

    // cone monotonicity and witness consistency over all dispatchable queries
    for (const ConeQuery& q : dispatchable_queries()) {
        ConeSlice cone = compute_cone(q);
        if (cone.nef_slope)
            s.expect(cone.lower_slope <= *cone.nef_slope, "lower <= nef");
        if (q.surface == SurfaceKind::NLGeneral && q.flex &&
            q.flex->status == FlexStatus::Ordinary) {
            ConeSlice weaker = compute_cone({q.d, q.n, q.surface, std::nullopt});
            s.expect(cone.lower_slope >= weaker.lower_slope, "monotone flex strengthening");
            if (weaker.status == ConeStatus::Exact)
                s.expect(cone.status == ConeStatus::Exact, "exactness never removed");
        }
    }
    return finish(8, "property suites", s,
                  "ring/resultant/squarefree (200+), multiplicity additivity and invariance "
                  "(50+), cone monotonicity d <= 12");
}

} // namespace

std::vector<CheckResult> run_verification() {
    std::vector<CheckResult> out;
    std::vector<std::function<CheckResult()>> checks = {
        check_curve_table, check_residuation,  check_dispatch_table, check_orthogonality,
        check_flex_certification, check_incidence, check_oracle,     check_properties,
    };
    for (auto& check : checks) {
        try {
            out.push_back(check());
        } catch (const std::exception& e) {
            CheckResult r;
            r.id = static_cast<int>(out.size()) + 1;
            r.name = "criterion " + std::to_string(r.id);
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
            out.push_back(r);
        }
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace hilbnef
