#ifndef HILBNEF_ORACLE_HPP
#define HILBNEF_ORACLE_HPP

#include "curves.hpp"
#include "flex.hpp"
#include "multipoly.hpp"

#include <optional>
#include <string>

namespace hilbnef {

// Projection of a plane curve from a point on it via the pencil of lines
// through the point. The curve is stored with the center moved to [0:0:1],
// so the affine chart z = 1 has no terms of total degree below the center
// multiplicity.
struct PencilProjection {
    MultiPoly curve;          // normalized ternary form, center at [0:0:1]
    ProjectivePoint center;   // the center as originally given
    long degree = 0;          // d
    long multiplicity = 0;    // m = multiplicity of the center
    long residual_degree = 0; // d - m
    MultiPoly affine;         // curve in the chart z = 1, over (x, y)
};

// Accepts a homogeneous ternary form, or a z-free polynomial which is
// homogenized in z. The center must lie on the curve (multiplicity >= 1) and
// leave a positive residual degree (m = d means there is nothing to spin).
PencilProjection make_pencil(const MultiPoly& curve, const ProjectivePoint& center);

// The residual binary-form family over (s, u) with pencil parameter t:
//   primary chart: lines y = t x;  reversed chart: lines x = t y.
// Together the charts cover every line through the center.
struct ResidualForm {
    MultiPoly primary;  // over (s, u, t)
    MultiPoly reversed; // over (s, u, t)
};
ResidualForm residual_form(const PencilProjection& pencil);

// Total multiplicity-weighted vanishing of the pencil discriminant:
//   count = deg_t(disc of primary chart) + ord_{t=0}(disc of reversed chart).
// The squarefree flag reports the generic, no-collision case (primary disc
// squarefree and the reversed chart vanishing at most simply at t = 0).
// Degenerate inputs are rejected: a pencil line lying on the curve
// (nonconstant content of the residual family) or a repeated component
// (identically-zero discriminant).
struct BranchCount {
    long count = 0;
    bool squarefree = false;
    long disc_degree = 0;    // degree of the primary-chart discriminant in t
    long infinity_order = 0; // vanishing order of the reversed-chart disc at t = 0
    MultiPoly disc;          // primary-chart discriminant (a polynomial in t)
};
BranchCount branch_count(const PencilProjection& pencil);

struct OracleReport {
    PencilProjection pencil;
    BranchCount branches;
    std::optional<long> predicted; // ramification degree from the genus profile
    std::string verdict;           // "match" or a mismatch description
};

// Runs the pencil oracle and, when a genus profile is supplied, compares the
// count against the Riemann-Hurwitz prediction; the center's local profile is
// verified too (multiplicity and ordinariness). Mismatches are reported,
// never silently absorbed.
OracleReport oracle_ramification(const MultiPoly& curve, const ProjectivePoint& center,
                                 std::optional<GenusProfile> profile);

} // namespace hilbnef

#endif
