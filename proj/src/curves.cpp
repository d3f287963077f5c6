#include "curves.hpp"

#include "errors.hpp"

namespace hilbnef {

long genus(const GenusProfile& profile) {
    if (profile.d < 1) throw DomainError("genus profile needs d >= 1");
    long g = profile.d >= 2 ? ((profile.d - 1) * (profile.d - 2)) / 2 : 0;
    switch (profile.profile) {
        case SingularityProfile::Smooth:
            return g;
        case SingularityProfile::Node:
            return g - 1;
        case SingularityProfile::OrdinaryMult:
            if (profile.r < 2) throw DomainError("ordinary profile needs multiplicity >= 2");
            return g - (profile.r * (profile.r - 1)) / 2;
    }
    throw DomainError("unreachable genus profile");
}

long ramification_degree(long g, long map_degree) {
    if (map_degree < 1) throw DomainError("ramification_degree needs map degree >= 1");
    if (g < 0) throw DomainError("ramification_degree needs genus >= 0");
    return 2 * g - 2 + 2 * map_degree;
}

CurveName curve_name_from_string(const std::string& name) {
    if (name == "gamma") return CurveName::Gamma;
    if (name == "phi") return CurveName::Phi;
    if (name == "psi") return CurveName::Psi;
    if (name == "res_gamma") return CurveName::ResGamma;
    if (name == "res_psi") return CurveName::ResPsi;
    if (name == "omega") return CurveName::Omega;
    if (name == "omega1") return CurveName::Omega1;
    if (name == "line_curve") return CurveName::LineCurve;
    if (name == "fiber") return CurveName::Fiber;
    throw DomainError("unknown curve name '" + name + "'");
}

std::string to_string(CurveName name) {
    switch (name) {
        case CurveName::Gamma: return "gamma";
        case CurveName::Phi: return "phi";
        case CurveName::Psi: return "psi";
        case CurveName::ResGamma: return "res_gamma";
        case CurveName::ResPsi: return "res_psi";
        case CurveName::Omega: return "omega";
        case CurveName::Omega1: return "omega1";
        case CurveName::LineCurve: return "line_curve";
        case CurveName::Fiber: return "fiber";
    }
    throw DomainError("unreachable curve name");
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

} // namespace

CurveClass make_curve(CurveName name, long d, long n, std::optional<long> r) {
    require(n >= 2, "curves live on X^[n] with n >= 2");
    require(d >= 3, "surface degree must be at least 3");
    CurveClass c;
    c.name = to_string(name);
    c.n = n;
    c.d = d;
    switch (name) {
        case CurveName::Gamma:
            c.h = 0;
            c.b = -2;
            c.provenance = "tangent-vector pencil at a fixed point; contracted by Hilbert-Chow";
            return c;
        case CurveName::Phi:
            c.h = d;
            c.b = 0;
            c.provenance = "one point moving along a general hyperplane section";
            return c;
        case CurveName::Psi:
            c.h = d;
            c.b = 2;
            c.provenance = "moving point on a hyperplane section through a fixed point of it";
            return c;
        case CurveName::ResGamma: {
            require(d >= 4, "res_gamma needs d >= 4 (d = 4 only as the quartic cross-check)");
            require(n == d - 2, "res_gamma lives on X^[d-2]");
            c.h = d;
            c.b = ramification_degree(genus(GenusProfile::node(d)), d - 2);
            c.provenance =
                "residuation image of the tangent-vector pencil: the tangent-plane section is a "
                "degree-d curve with one node, projected from the node (Riemann-Hurwitz)";
            return c;
        }
        case CurveName::ResPsi: {
            require(d >= 5, "res_psi needs d >= 5");
            require(n == d - 2, "res_psi lives on X^[d-2]");
            c.h = d * (d - 2);
            // (d-3) residual non-reduced schemes over each of the d^2-d-2
            // branch points of the degree-(d-1) projection from a point of
            // a smooth hyperplane section.
            c.b = (d - 3) * ramification_degree(genus(GenusProfile::smooth(d)), d - 1);
            c.provenance =
                "residuation image of the moving-point pencil: projection of a smooth hyperplane "
                "section from a point on it (Riemann-Hurwitz), d-3 residual collisions per branch";
            return c;
        }
        case CurveName::Omega: {
            require(d >= 5, "omega needs d >= 5");
            require(r.has_value(), "omega needs the flex multiplicity r");
            require(*r >= 3, "omega needs r >= 3 (ordinary flexes start at multiplicity 3)");
            require(*r <= d - 2, "omega needs n = d - r >= 2");
            require(n == d - *r, "omega lives on X^[d-r]");
            c.r = *r;
            c.h = d;
            c.b = ramification_degree(genus(GenusProfile::ordinary(d, *r)), d - *r);
            c.provenance =
                "line pencil through the ordinary r-fold point of the tangent-plane section at an "
                "ordinary surface r-flex (Riemann-Hurwitz); hypothesis: such a flex exists";
            return c;
        }
        case CurveName::Omega1:
            require(d == 5 && n == 2, "omega1 is defined only for quintics on X^[2]");
            c.h = 10;
            c.b = 14;
            c.provenance =
                "tangent-line pencil at a general point of a quintic, paired with one residual "
                "intersection point in turn";
            return c;
        case CurveName::LineCurve:
            c.h = 1;
            c.b = 2 * n - 2;
            c.provenance =
                "moving point on a line contained in the surface (contracted by the degree-(n-1) "
                "span map); hypothesis: the surface contains a line";
            return c;
        case CurveName::Fiber:
            require(d >= 4, "fiber curve needs d >= 4");
            require(n >= d - 1, "fiber curve needs n >= d - 1");
            c.h = d;
            c.b = ramification_degree(genus(GenusProfile::smooth(d)), n);
            c.provenance =
                "fibers of a degree-n pencil on a general (smooth) hyperplane section "
                "(Riemann-Hurwitz)";
            return c;
    }
    throw DomainError("unreachable curve construction");
}

std::vector<CurveClass> curve_table(long d, long n, bool contains_line) {
    require(n >= 2 && d >= 3, "curve table needs d >= 3 and n >= 2");
    std::vector<CurveClass> out;
    out.push_back(make_curve(CurveName::Gamma, d, n));
    out.push_back(make_curve(CurveName::Phi, d, n));
    out.push_back(make_curve(CurveName::Psi, d, n));
    if (!contains_line) {
        if (n == d - 2 && d >= 4) out.push_back(make_curve(CurveName::ResGamma, d, n));
        if (n == d - 2 && d >= 5) out.push_back(make_curve(CurveName::ResPsi, d, n));
        long r = d - n;
        if (d >= 5 && r >= 3 && r <= d - 2) out.push_back(make_curve(CurveName::Omega, d, n, r));
        if (d == 5 && n == 2) out.push_back(make_curve(CurveName::Omega1, d, n));
        if (d >= 4 && n >= d - 1) out.push_back(make_curve(CurveName::Fiber, d, n));
    } else {
        out.push_back(make_curve(CurveName::LineCurve, d, n));
    }
    return out;
}

} // namespace hilbnef
