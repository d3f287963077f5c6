#ifndef HILBNEF_CURVES_HPP
#define HILBNEF_CURVES_HPP

#include "nscone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbnef {

enum class SingularityProfile { Smooth, Node, OrdinaryMult };

// Degree-d plane curve with at most one singular point of the given profile.
struct GenusProfile {
    long d = 3;
    SingularityProfile profile = SingularityProfile::Smooth;
    long r = 0; // multiplicity for OrdinaryMult

    static GenusProfile smooth(long d) { return {d, SingularityProfile::Smooth, 0}; }
    static GenusProfile node(long d) { return {d, SingularityProfile::Node, 0}; }
    static GenusProfile ordinary(long d, long r) { return {d, SingularityProfile::OrdinaryMult, r}; }
};

// C(d-1, 2), minus 1 for a node, minus C(r, 2) for an ordinary r-fold point.
long genus(const GenusProfile& profile);

// 2g - 2 + 2*map_degree (Riemann-Hurwitz for a degree-map_degree cover of
// the line by a genus-g curve).
long ramification_degree(long g, long map_degree);

enum class CurveName {
    Gamma,     // tangent-vector pencil at a fixed point;  (h,b) = (0, -2)
    Phi,       // moving point in a hyperplane section;    (d, 0)
    Psi,       // same, section through a fixed point;     (d, 2)
    ResGamma,  // residuation image of Gamma on X^[d-2];   (d, d^2-d-6)
    ResPsi,    // residuation image of Psi on X^[d-2];     (d(d-2), (d-3)(d^2-d-2))
    Omega,     // line pencil through an ordinary r-fold point; (d, d^2-d-r^2-r)
    Omega1,    // quintic tangent-line pencil with one residual point; (10, 14)
    LineCurve, // moving point on a line in the surface;   (1, 2n-2)
    Fiber,     // fibers of a degree-n pencil on a section; (d, d^2-3d+2n)
};

CurveName curve_name_from_string(const std::string& name);
std::string to_string(CurveName name);

// Builds the named curve with intersection numbers computed from genus and
// Riemann-Hurwitz where the catalog's derivation goes through a projection
// (the closed forms are kept as test assertions). Parameter constraints:
//   gamma/phi/psi:  d >= 3, n >= 2
//   res_gamma:      d >= 4 (d = 4 only for the quartic cross-check), n = d-2
//   res_psi:        d >= 5, n = d-2
//   omega:          d >= 5, 3 <= r <= d-2, n = d-r
//   omega1:         d = 5, n = 2
//   line_curve:     d >= 3, n >= 2
//   fiber:          d >= 4, n >= d-1
CurveClass make_curve(CurveName name, long d, long n, std::optional<long> r = std::nullopt);

// All curves applicable to (d, n) on the given surface kind, for the table
// rendering. Hypothesis-carrying curves (omega, omega1, line_curve) are
// included with their hypothesis spelled out in the provenance.
std::vector<CurveClass> curve_table(long d, long n, bool contains_line);

} // namespace hilbnef

#endif
