#include "flex.hpp"

#include "errors.hpp"
#include "resultant.hpp"

#include <algorithm>
#include <sstream>

namespace hilbnef {

ProjectivePoint ProjectivePoint::make(std::vector<Rational> coords) {
    std::size_t last = coords.size();
    for (std::size_t i = coords.size(); i-- > 0;) {
        if (coords[i] != 0) {
            last = i;
            break;
        }
    }
    if (last == coords.size()) throw DomainError("projective point cannot have all coordinates zero");
    Rational scale = coords[last];
    for (auto& c : coords) c /= scale;
    return ProjectivePoint{std::move(coords)};
}

ProjectivePoint ProjectivePoint::parse(const std::string& csv, std::size_t expected_size) {
    std::vector<Rational> coords;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        // trim whitespace
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw DomainError("empty coordinate in point '" + csv + "'");
        coords.push_back(rational_from_string(item.substr(a, b - a + 1)));
    }
    if (coords.size() != expected_size)
        throw DomainError("expected " + std::to_string(expected_size) + " coordinates, got " +
                          std::to_string(coords.size()));
    return make(std::move(coords));
}

std::string ProjectivePoint::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ":";
        out += rational_to_string(coords[i]);
    }
    return out + "]";
}

const VarList& surface_vars() {
    static const VarList vars{"x", "y", "z", "w"};
    return vars;
}

const VarList& plane_vars() {
    static const VarList vars{"x", "y", "z"};
    return vars;
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "Xdr" || name == "xdr") return FamilyKind::Xdr;
    if (name == "Yd" || name == "yd") return FamilyKind::Yd;
    throw DomainError("unknown family '" + name + "' (expected Xdr or Yd)");
}

MultiPoly make_family(FamilyKind kind, long d, std::optional<long> r) {
    const VarList& vars = surface_vars();
    MultiPoly x = MultiPoly::variable(vars, "x");
    MultiPoly y = MultiPoly::variable(vars, "y");
    MultiPoly z = MultiPoly::variable(vars, "z");
    MultiPoly w = MultiPoly::variable(vars, "w");
    switch (kind) {
        case FamilyKind::Xdr: {
            if (!r) throw DomainError("the Xdr family needs the flex multiplicity r");
            if (!(3 <= *r && *r <= d))
                throw DomainError("the Xdr family needs 3 <= r <= d");
            return (x.pow(*r) + y.pow(*r)) * w.pow(d - *r) - z * w.pow(d - 1);
        }
        case FamilyKind::Yd:
            if (d < 3) throw DomainError("the Yd family needs d >= 3");
            if (r) throw DomainError("the Yd family takes no multiplicity parameter");
            return x.pow(d) + y.pow(d) + z.pow(d) - z * w.pow(d - 1);
    }
    throw DomainError("unreachable family");
}

namespace {

void require_point_shape(const MultiPoly& F, const ProjectivePoint& p) {
    if (p.coords.size() != F.vars().size())
        throw DomainError("point has " + std::to_string(p.coords.size()) +
                          " coordinates but the polynomial has " + std::to_string(F.vars().size()) +
                          " variables");
}

std::vector<Rational> gradient_at(const MultiPoly& F, const ProjectivePoint& p) {
    std::vector<Rational> g;
    g.reserve(F.vars().size());
    for (const auto& v : F.vars()) g.push_back(F.partial(v).eval(p.coords));
    return g;
}

} // namespace

bool is_smooth_at(const MultiPoly& F, const ProjectivePoint& p) {
    require_point_shape(F, p);
    auto h = F.homogeneous_degree();
    if (!h.degree || *h.degree < 1)
        throw DomainError("smoothness test needs a homogeneous polynomial of positive degree");
    if (F.eval(p.coords) != 0)
        throw DomainError("point " + p.to_string() + " is not on the hypersurface");
    auto g = gradient_at(F, p);
    return std::any_of(g.begin(), g.end(), [](const Rational& c) { return c != 0; });
}

MultiPoly tangent_plane(const MultiPoly& F, const ProjectivePoint& p) {
    if (!is_smooth_at(F, p))
        throw DomainError("tangent plane undefined: " + p.to_string() + " is a singular point");
    auto g = gradient_at(F, p);
    MultiPoly plane(F.vars());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        plane += MultiPoly::variable(F.vars(), F.vars()[i]).scaled(g[i]);
    }
    return plane.primitive_normalized();
}

PlaneSection plane_section(const MultiPoly& F, const MultiPoly& lambda) {
    if (lambda.is_zero()) throw DomainError("hyperplane form must be nonzero");
    if (lambda.vars() != F.vars())
        throw DomainError("hyperplane form must be over the same variables as the surface");
    auto h = lambda.homogeneous_degree();
    if (h.degree != 1) throw DomainError("hyperplane form must be linear homogeneous");
    if (!F.homogeneous_degree().degree)
        throw DomainError("plane section needs a homogeneous surface form");

    // pivot: the last variable with a nonzero coefficient in lambda
    const VarList& vars = F.vars();
    std::size_t pivot = vars.size();
    for (std::size_t i = vars.size(); i-- > 0;) {
        if (lambda.uses_var(vars[i])) {
            pivot = i;
            break;
        }
    }
    Exponents e(vars.size(), 0);
    e[pivot] = 1;
    Rational c = lambda.terms().at(e);
    MultiPoly rest = lambda - MultiPoly::monomial(vars, e, c);
    MultiPoly solved = rest.scaled(Rational(-1) / c); // pivot = solved

    VarList remaining;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (i != pivot) remaining.push_back(vars[i]);

    PlaneSection out;
    out.pivot = vars[pivot];
    out.substitution = solved.restricted_to(remaining);
    out.section = F.substitute(vars[pivot], solved).restricted_to(remaining);
    return out;
}

LocalGeometry local_geometry(const MultiPoly& curve, const ProjectivePoint& q) {
    if (curve.is_zero()) throw DomainError("multiplicity undefined on the zero polynomial");
    const VarList& vars = curve.vars();
    require_point_shape(curve, q);

    MultiPoly affine = curve;
    VarList chart = vars;
    std::vector<Rational> affine_point = q.coords;
    if (vars.size() == 3) {
        if (!curve.homogeneous_degree().degree)
            throw DomainError("a three-variable curve must be a homogeneous ternary form");
        // dehomogenize at the last nonzero coordinate (1 after normalization)
        std::size_t i = q.coords.size();
        for (std::size_t k = q.coords.size(); k-- > 0;)
            if (q.coords[k] != 0) {
                i = k;
                break;
            }
        chart.clear();
        affine_point.clear();
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (k == i) continue;
            chart.push_back(vars[k]);
            affine_point.push_back(q.coords[k]);
        }
        affine = curve.substitute(vars[i], Rational(1)).restricted_to(chart);
    } else if (vars.size() != 2) {
        throw DomainError("multiplicity needs a ternary form or a two-variable affine curve");
    }

    // translate the point to the origin
    for (std::size_t k = 0; k < chart.size(); ++k) {
        MultiPoly shifted =
            MultiPoly::variable(chart, chart[k]) + MultiPoly::constant(chart, affine_point[k]);
        affine = affine.substitute(chart[k], shifted);
    }
    if (affine.is_zero())
        throw DomainError("curve vanishes identically in the chart (degenerate section)");

    long mult = -1;
    for (const auto& [e, c] : affine.terms()) {
        long deg = 0;
        for (unsigned k : e) deg += k;
        if (mult < 0 || deg < mult) mult = deg;
    }
    if (mult == 0)
        throw DomainError("point " + q.to_string() + " is not on the curve (multiplicity 0)");

    LocalGeometry out;
    out.multiplicity = mult;
    out.chart_vars = chart;
    MultiPoly cone(chart);
    for (const auto& [e, c] : affine.terms()) {
        long deg = 0;
        for (unsigned k : e) deg += k;
        if (deg == mult) cone += MultiPoly::monomial(chart, e, c);
    }
    out.tangent_cone = cone;
    return out;
}

long multiplicity_at(const MultiPoly& curve, const ProjectivePoint& q) {
    return local_geometry(curve, q).multiplicity;
}

MultiPoly tangent_cone_at(const MultiPoly& curve, const ProjectivePoint& q) {
    return local_geometry(curve, q).tangent_cone;
}

FlexReport flex_check(const MultiPoly& F, const ProjectivePoint& p, long r) {
    auto h = F.homogeneous_degree();
    if (!h.degree || *h.degree < 3)
        throw DomainError("flex check needs a homogeneous surface of degree >= 3");
    if (!(3 <= r && r <= *h.degree)) throw DomainError("flex check needs 3 <= r <= deg F");
    if (!is_smooth_at(F, p))
        throw DomainError("unsupported: flex check at a singular point (only the tangent plane of "
                          "a smooth point is tested)");

    FlexReport report;
    report.point = p;
    report.smooth_at_point = true;
    report.tangent_plane = tangent_plane(F, p);
    report.section = plane_section(F, report.tangent_plane);

    // the point in the section chart: drop the pivot coordinate
    std::vector<Rational> qc;
    for (std::size_t i = 0; i < F.vars().size(); ++i)
        if (F.vars()[i] != report.section.pivot) qc.push_back(p.coords[i]);
    ProjectivePoint q = ProjectivePoint::make(std::move(qc));

    LocalGeometry local = local_geometry(report.section.section, q);
    report.multiplicity = local.multiplicity;
    report.tangent_cone = local.tangent_cone;
    report.verdict.r = r;
    report.verdict.is_flex = local.multiplicity >= r;
    report.verdict.ordinary =
        local.multiplicity == r && is_squarefree(local.tangent_cone);
    return report;
}

std::vector<ScanEntry> flex_scan(const MultiPoly& F, const std::vector<ProjectivePoint>& sample,
                                 long r) {
    std::vector<ScanEntry> out;
    out.reserve(sample.size());
    for (const auto& p : sample) {
        ScanEntry entry;
        entry.point = p;
        try {
            entry.report = flex_check(F, p, r);
        } catch (const DomainError& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

namespace {

// True iff f is a single term c * var^k with k >= 1 and no other variable.
bool is_pure_power(const MultiPoly& f, const std::string& var) {
    if (f.term_count() != 1) return false;
    VarList used = f.used_vars();
    return used.size() == 1 && used.front() == var;
}

} // namespace

bool y_family_smoothness_certificate(long d) {
    MultiPoly G = make_family(FamilyKind::Yd, d);
    MultiPoly fx = G.partial("x");
    MultiPoly fy = G.partial("y");
    MultiPoly fz = G.partial("z");
    MultiPoly fw = G.partial("w");

    // dF/dx = d x^(d-1) and dF/dy = d y^(d-1): pure powers force x = y = 0.
    if (!is_pure_power(fx, "x") || !is_pure_power(fy, "y")) return false;

    MultiPoly fz0 = fz.substitute("x", Rational(0)).substitute("y", Rational(0));
    MultiPoly fw0 = fw.substitute("x", Rational(0)).substitute("y", Rational(0));

    // dF/dw on {x=y=0} must be a single term c * z^a w^b with a, b >= 1, so
    // its zero set splits into the two branches z = 0 and w = 0.
    if (fw0.term_count() != 1) return false;
    if (fw0.degree_in("z").value_or(0) < 1 || fw0.degree_in("w").value_or(0) < 1) return false;

    // Each branch substituted into dF/dz on {x=y=0} must leave a pure power
    // of the surviving variable, forcing it to vanish as well.
    MultiPoly branch_z0 = fz0.substitute("z", Rational(0));
    MultiPoly branch_w0 = fz0.substitute("w", Rational(0));
    if (!is_pure_power(branch_z0, "w")) return false;
    if (!is_pure_power(branch_w0, "z")) return false;

    // Every branch forces all four coordinates to vanish: no projective
    // singular point exists.
    return true;
}

IncidenceReport incidence(long d, long r) {
    if (!(d >= r && r >= 3)) throw DomainError("incidence arithmetic needs d >= r >= 3");
    Integer n_big = binomial(d + 3, 3);
    if (!n_big.fits_slong_p()) throw DomainError("degree too large for incidence arithmetic");
    IncidenceReport rep;
    rep.d = d;
    rep.r = r;
    rep.N = n_big.get_si();
    long conditions = (r * (r + 1)) / 2; // binom(r+1, 2)
    rep.dim_sigma = rep.N + 4 - conditions;
    rep.fiber_dim = rep.N - 1 - conditions;
    rep.threshold_ok = d >= conditions - 1;
    rep.nl_codim_floor = d - 3;
    return rep;
}

} // namespace hilbnef
