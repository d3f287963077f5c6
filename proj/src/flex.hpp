#ifndef HILBNEF_FLEX_HPP
#define HILBNEF_FLEX_HPP

#include "multipoly.hpp"
#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbnef {

// Projective point with exact rational coordinates, normalized so the last
// nonzero coordinate is 1.
struct ProjectivePoint {
    std::vector<Rational> coords;

    static ProjectivePoint make(std::vector<Rational> coords);
    static ProjectivePoint parse(const std::string& csv, std::size_t expected_size);
    std::string to_string() const;
    bool operator==(const ProjectivePoint&) const = default;
};

const VarList& surface_vars(); // x, y, z, w
const VarList& plane_vars();   // x, y, z

enum class FamilyKind { Xdr, Yd };
FamilyKind family_kind_from_string(const std::string& name);

// Xdr: (x^r + y^r) w^(d-r) - z w^(d-1), an isolated ordinary surface r-flex
//      at [0:0:0:1] (the surface itself is degenerate away from the chart).
// Yd:  x^d + y^d + z^d - z w^(d-1), smooth, with a surface r-flex at
//      [0:0:0:1] for every 3 <= r <= d.
MultiPoly make_family(FamilyKind kind, long d, std::optional<long> r = std::nullopt);

// True iff the gradient of F at p is nonzero. F must be homogeneous of
// positive degree and vanish at p.
bool is_smooth_at(const MultiPoly& F, const ProjectivePoint& p);

// The linear form sum_i dF/dx_i(p) * x_i, normalized to primitive integer
// coefficients with positive leading coefficient. Requires a smooth point.
MultiPoly tangent_plane(const MultiPoly& F, const ProjectivePoint& p);

// F restricted to the hyperplane lambda = 0, in coordinates adapted to
// lambda: the pivot variable (the last one with a nonzero coefficient) is
// solved for and substituted away.
struct PlaneSection {
    MultiPoly section;      // over the three remaining variables
    std::string pivot;      // eliminated variable
    MultiPoly substitution; // pivot = substitution (over the remaining variables)
};
PlaneSection plane_section(const MultiPoly& F, const MultiPoly& lambda);

// Multiplicity and tangent cone of a plane curve at a point. Accepts a
// homogeneous ternary form with a projective point, or a two-variable affine
// polynomial with an affine point. A point off the curve (multiplicity 0) is
// a domain error, as is the zero polynomial.
struct LocalGeometry {
    long multiplicity = 0;
    MultiPoly tangent_cone; // binary form in the chart variables
    VarList chart_vars;
};
LocalGeometry local_geometry(const MultiPoly& curve, const ProjectivePoint& q);
long multiplicity_at(const MultiPoly& curve, const ProjectivePoint& q);
MultiPoly tangent_cone_at(const MultiPoly& curve, const ProjectivePoint& q);

struct FlexVerdict {
    bool is_flex = false; // multiplicity >= r
    long r = 0;
    bool ordinary = false; // multiplicity == r and squarefree tangent cone
};

struct FlexReport {
    ProjectivePoint point;
    bool smooth_at_point = false;
    MultiPoly tangent_plane;
    PlaneSection section;
    long multiplicity = 0;
    MultiPoly tangent_cone;
    FlexVerdict verdict;
};

// Tests whether p is a surface r-flex by sectioning with the tangent plane
// (at a smooth point only the tangent plane can give multiplicity >= 3;
// singular points are rejected as unsupported).
FlexReport flex_check(const MultiPoly& F, const ProjectivePoint& p, long r);

struct ScanEntry {
    ProjectivePoint point;
    std::optional<FlexReport> report;
    std::string error; // set when flex_check rejected the point
};

// flex_check over a sample of points; a search utility, explicitly not a
// proof of absence.
std::vector<ScanEntry> flex_scan(const MultiPoly& F, const std::vector<ProjectivePoint>& sample,
                                 long r);

// Certifies smoothness of the Yd family by executing its triangular gradient
// case split on the actual partial derivatives: dF/dx and dF/dy are pure
// powers forcing x = y = 0, and on that locus the remaining two partials
// force z = w = 0, so the gradient has no projective zero.
bool y_family_smoothness_certificate(long d);

// Dimension bookkeeping for the incidence correspondence of (surface,
// hyperplane, point) triples with an r-fold point on the section.
struct IncidenceReport {
    long d = 0;
    long r = 0;
    long N = 0;             // binom(d+3, 3)
    long dim_sigma = 0;     // N + 4 - binom(r+1, 2)
    long fiber_dim = 0;     // N - 1 - binom(r+1, 2)
    bool threshold_ok = false; // d >= binom(r+1, 2) - 1
    long nl_codim_floor = 0;   // d - 3
};
IncidenceReport incidence(long d, long r);

} // namespace hilbnef

#endif
