#include "oracle.hpp"

#include "errors.hpp"
#include "resultant.hpp"

#include <algorithm>

namespace hilbnef {

namespace {

const VarList& pencil_vars() {
    static const VarList vars{"s", "u", "t"};
    return vars;
}

MultiPoly homogenize_in_z(const MultiPoly& f) {
    long d = f.total_degree().value_or(0);
    std::size_t zi = f.var_index("z");
    MultiPoly out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        long deg = 0;
        for (unsigned k : e) deg += k;
        Exponents ne = e;
        ne[zi] += static_cast<unsigned>(d - deg);
        out += MultiPoly::monomial(f.vars(), ne, c);
    }
    return out;
}

// curve composed with the linear change of coordinates given by `cols`
// (columns are the images of the basis vectors).
MultiPoly compose_linear(const MultiPoly& curve, const std::vector<std::vector<Rational>>& cols) {
    const VarList& vars = curve.vars();
    std::vector<MultiPoly> images;
    for (std::size_t row = 0; row < vars.size(); ++row) {
        MultiPoly lin(vars);
        for (std::size_t col = 0; col < vars.size(); ++col) {
            if (cols[col][row] == 0) continue;
            lin += MultiPoly::variable(vars, vars[col]).scaled(cols[col][row]);
        }
        images.push_back(std::move(lin));
    }
    MultiPoly out(vars);
    for (const auto& [e, c] : curve.terms()) {
        MultiPoly term = MultiPoly::constant(vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        out += term;
    }
    return out;
}

// Binary-form coefficients of `form` (homogeneous of degree e in s, u), as
// polynomials in t, highest s-power first.
std::vector<MultiPoly> binary_coefficients(const MultiPoly& form, long e) {
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(e) + 1);
    for (long k = e; k >= 0; --k) {
        MultiPoly ck = form.coefficient_of("s", k);
        out.push_back(ck.coefficient_of("u", e - k));
    }
    return out;
}

// Discriminant of a binary form of formal degree e >= 2 with coefficients in
// Q[t]: (-1)^(e(e-1)/2) * Res(F_s, F_u) / e^(e-2), the resultant taken with
// formal degrees e-1 so roots at infinity are handled uniformly.
MultiPoly binary_discriminant(const MultiPoly& form, long e) {
    MultiPoly fs = form.partial("s");
    MultiPoly fu = form.partial("u");
    MultiPoly res = resultant_from_coefficients(binary_coefficients(fs, e - 1),
                                                binary_coefficients(fu, e - 1));
    Rational scale(1);
    for (long k = 0; k < e - 2; ++k) scale *= e;
    MultiPoly disc = res.scaled(1 / scale);
    return ((e * (e - 1) / 2) % 2 != 0) ? -disc : disc;
}

long t_valuation(const MultiPoly& f) {
    std::size_t ti = f.var_index("t");
    long best = -1;
    for (const auto& [e, c] : f.terms()) {
        long v = e[ti];
        if (best < 0 || v < best) best = v;
    }
    return best; // -1 for the zero polynomial
}

// gcd in Q[t] of the (s,u)-coefficients; nonconstant iff a pencil line lies
// on the curve.
MultiPoly pencil_content(const MultiPoly& form) {
    std::size_t si = form.var_index("s");
    std::size_t ui = form.var_index("u");
    std::size_t ti = form.var_index("t");
    std::map<std::pair<unsigned, unsigned>, MultiPoly> by_su;
    for (const auto& [e, c] : form.terms()) {
        Exponents te(e.size(), 0);
        te[ti] = e[ti];
        auto [it, inserted] = by_su.try_emplace(std::make_pair(e[si], e[ui]), form.vars());
        it->second += MultiPoly::monomial(form.vars(), te, c);
    }
    MultiPoly content(form.vars());
    bool first = true;
    for (const auto& [key, coeff] : by_su) {
        if (first) {
            content = coeff;
            first = false;
        } else {
            content = gcd_univariate(content, coeff);
        }
        if (!content.is_zero() && content.total_degree().value_or(0) == 0) break;
    }
    return content;
}

} // namespace

PencilProjection make_pencil(const MultiPoly& input, const ProjectivePoint& center) {
    if (input.is_zero()) throw DomainError("the zero polynomial is not a curve");
    MultiPoly curve = input;
    if (curve.vars() != plane_vars())
        curve = curve.extended_to(plane_vars());
    auto h = curve.homogeneous_degree();
    if (!h.degree) {
        if (curve.uses_var("z"))
            throw DomainError("curve must be homogeneous in (x, y, z) or free of z");
        curve = homogenize_in_z(curve);
        h = curve.homogeneous_degree();
    }
    long d = *h.degree;
    if (d < 1) throw DomainError("curve must have positive degree");
    if (center.coords.size() != 3) throw DomainError("plane-curve center needs 3 coordinates");

    // move the center to [0:0:1]
    MultiPoly moved = curve;
    ProjectivePoint origin = ProjectivePoint::make({Rational(0), Rational(0), Rational(1)});
    if (!(center == origin)) {
        std::size_t last = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (center.coords[i] != 0) last = i;
        std::vector<std::vector<Rational>> cols(3, std::vector<Rational>(3, Rational(0)));
        std::size_t filled = 0;
        for (std::size_t i = 0; i < 3 && filled < 2; ++i) {
            if (i == last) continue;
            cols[filled][i] = 1;
            ++filled;
        }
        cols[2] = center.coords;
        moved = compose_linear(curve, cols);
    }

    if (moved.eval({Rational(0), Rational(0), Rational(1)}) != 0)
        throw DomainError("center " + center.to_string() +
                          " must lie on the curve (multiplicity 0)");

    MultiPoly affine = moved.substitute("z", Rational(1)).restricted_to(VarList{"x", "y"});
    long m = -1;
    for (const auto& [e, c] : affine.terms()) {
        long deg = e[0] + e[1];
        if (m < 0 || deg < m) m = deg;
    }
    if (m < 1) throw DomainError("center must lie on the curve (multiplicity 0)");
    if (d - m < 1)
        throw DomainError("residual degree is zero: the curve is a cone over the center, nothing "
                          "to spin");

    PencilProjection out;
    out.curve = moved;
    out.center = center;
    out.degree = d;
    out.multiplicity = m;
    out.residual_degree = d - m;
    out.affine = affine;
    return out;
}

ResidualForm residual_form(const PencilProjection& pencil) {
    const VarList& vars = pencil_vars();
    MultiPoly s = MultiPoly::variable(vars, "s");
    MultiPoly u = MultiPoly::variable(vars, "u");
    MultiPoly t = MultiPoly::variable(vars, "t");
    MultiPoly primary(vars), reversed(vars);
    const long d = pencil.degree;
    const long m = pencil.multiplicity;
    for (const auto& [e, c] : pencil.affine.terms()) {
        long a = e[0], b = e[1];
        long k = a + b;
        // x^a y^b contributes c*t^b (primary, line y = t x) or c*t^a (reversed)
        MultiPoly shape = s.pow(k - m) * u.pow(d - k);
        primary += shape * t.pow(b).scaled(c);
        reversed += shape * t.pow(a).scaled(c);
    }
    return ResidualForm{std::move(primary), std::move(reversed)};
}

BranchCount branch_count(const PencilProjection& pencil) {
    ResidualForm forms = residual_form(pencil);
    const long e = pencil.residual_degree;

    for (const MultiPoly* form : {&forms.primary, &forms.reversed}) {
        MultiPoly content = pencil_content(*form);
        if (content.total_degree().value_or(0) > 0)
            throw DomainError(
                "degenerate input: a pencil line lies on the curve (the residual family vanishes "
                "identically at a parameter value)");
    }

    BranchCount out;
    if (e == 1) {
        // a degree-1 projection is an isomorphism: no branching
        out.count = 0;
        out.squarefree = true;
        out.disc = MultiPoly::constant(pencil_vars(), 1);
        return out;
    }

    MultiPoly disc1 = binary_discriminant(forms.primary, e);
    MultiPoly disc2 = binary_discriminant(forms.reversed, e);
    if (disc1.is_zero() || disc2.is_zero())
        throw DomainError(
            "degenerate input: identically-zero discriminant (the residual has a repeated "
            "component)");

    out.disc = disc1;
    out.disc_degree = disc1.degree_in("t").value_or(0);
    out.infinity_order = t_valuation(disc2);
    out.count = out.disc_degree + out.infinity_order;
    out.squarefree = is_squarefree(disc1) && out.infinity_order <= 1;

    // chart-exchange consistency (a structural identity of the two charts)
    long count_swapped = disc2.degree_in("t").value_or(0) + t_valuation(disc1);
    if (count_swapped != out.count)
        throw DomainError("internal error: pencil charts disagree on the branch count");
    return out;
}

OracleReport oracle_ramification(const MultiPoly& curve, const ProjectivePoint& center,
                                 std::optional<GenusProfile> profile) {
    OracleReport report;
    report.pencil = make_pencil(curve, center);
    report.branches = branch_count(report.pencil);

    if (!profile) {
        report.verdict = report.branches.squarefree
                             ? "computed (no genus profile supplied)"
                             : "extra singularities or non-generic instance";
        return report;
    }

    profile->d = report.pencil.degree;
    long profile_mult = 1;
    switch (profile->profile) {
        case SingularityProfile::Smooth: profile_mult = 1; break;
        case SingularityProfile::Node: profile_mult = 2; break;
        case SingularityProfile::OrdinaryMult: profile_mult = profile->r; break;
    }
    report.predicted =
        ramification_degree(genus(*profile), report.pencil.degree - profile_mult);

    if (report.pencil.multiplicity != profile_mult) {
        report.verdict = "center multiplicity " + std::to_string(report.pencil.multiplicity) +
                         " does not match the supplied profile";
        return report;
    }
    if (profile_mult >= 2) {
        // the genus formula needs the center to be ordinary
        MultiPoly cone = tangent_cone_at(
            report.pencil.curve, ProjectivePoint::make({Rational(0), Rational(0), Rational(1)}));
        if (!is_squarefree(cone)) {
            report.verdict = "center singularity is not ordinary (tangent cone not squarefree)";
            return report;
        }
    }
    report.verdict = (report.branches.count == *report.predicted && report.branches.squarefree)
                         ? "match"
                         : "extra singularities or non-generic instance";
    return report;
}

} // namespace hilbnef
