#ifndef HILBNEF_RATIONAL_HPP
#define HILBNEF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hilbnef {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (GMP keeps arithmetic results canonical).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" with q > 0. Throws PolyParseError on anything else.
Rational rational_from_string(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

Integer binomial(long n, long k);

// GMP's two-argument constructor does not canonicalize; this one does.
inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& value) { return sgn(value); }

} // namespace hilbnef

#endif
