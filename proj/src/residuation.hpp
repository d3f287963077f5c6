#ifndef HILBNEF_RESIDUATION_HPP
#define HILBNEF_RESIDUATION_HPP

#include "nscone.hpp"

namespace hilbnef {

// The pullback along the residuation isomorphism composed with the inclusion
// of the collinear locus: a linear map N^1(X^[d-2]) -> N^1(X^[2]) acting on
// (alpha, beta) coordinates. Columns are pinned by the images of H^[d-2] and
// B^[d-2]:
//   H^[d-2] -> (d-1) H^[2] - (d/2) B^[2]          i.e. (alpha,beta) = (d-1, d)
//   B^[d-2] -> (d^2-3d) H^[2] - ((d^2-d-6)/2) B^[2]       = (d^2-3d, d^2-d-6)
struct ResiduationMap {
    long d;
    Rational m[2][2]; // acts on column vectors (alpha, beta)

    static ResiduationMap for_degree(long d);
};

// Matrix action; D must live on X^[d-2] with D.d == map.d.
NSClass pullback(const ResiduationMap& map, const NSClass& divisor);

// Projection-formula identity: pair(pullback(D), C) == pair(D, pushforward(C))
// for C one of Gamma or Psi on X^[2] (their pushforwards are res_gamma and
// res_psi). Returns true iff both sides agree.
bool adjoint_check(const ResiduationMap& map, const CurveClass& curve_on_x2, const NSClass& divisor);

enum class PullbackCatalog {
    P3StarL,         // span map X^[3] --> P^3* (d = 5): hyperplane class pulls back to (1, 1)
    GrassmannSigma1, // quadric span map X^[4] --> Gr (d = 6): sigma_1 pulls back to (2, 1)
};

// Nef-away-from-the-collinear-locus classes obtained by pulling back ample
// classes along the span maps.
NSClass pullback_catalog(PullbackCatalog which);

} // namespace hilbnef

#endif
