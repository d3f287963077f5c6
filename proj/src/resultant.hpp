#ifndef HILBNEF_RESULTANT_HPP
#define HILBNEF_RESULTANT_HPP

#include "multipoly.hpp"

#include <vector>

namespace hilbnef {

// Exact multivariate division; throws DomainError if b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

// Fraction-free (Bareiss) determinant; entries must share one variable list.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

// Sylvester resultant eliminating `var`; f and g must both have positive
// degree in `var` (degree-zero input is a domain error).
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

// Sylvester determinant from explicit coefficient lists (highest power
// first); the formal degrees are the list lengths minus one, so vanishing
// leading coefficients are honored. Used for binary-form discriminants.
MultiPoly resultant_from_coefficients(const std::vector<MultiPoly>& f_coeffs,
                                      const std::vector<MultiPoly>& g_coeffs);

// (-1)^(m(m-1)/2) res(f, f')/lc for m = deg_var f >= 2.
MultiPoly discriminant(const MultiPoly& f, const std::string& var);

// Monic gcd of two polynomials in a single shared variable (constants count
// as degree 0; gcd with a nonzero constant is 1).
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b);

// True iff gcd(f, f') is constant. Accepts nonzero constants (trivially
// squarefree), univariate polynomials, and homogeneous binary forms (both
// dehomogenizations squarefree and root-at-infinity multiplicity <= 1).
bool is_squarefree(const MultiPoly& f);

// f / gcd(f, f') for nonzero univariate f.
MultiPoly squarefree_part(const MultiPoly& f);

} // namespace hilbnef

#endif
