#ifndef HILBNEF_MULTIPOLY_HPP
#define HILBNEF_MULTIPOLY_HPP

#include "rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbnef {

using Exponents = std::vector<unsigned>;
using VarList = std::vector<std::string>;

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed ordered variable list. Stored terms never have zero coefficients;
// every exponent vector has one entry per variable.
class MultiPoly {
public:
    MultiPoly() = default; // zero polynomial over the empty variable list
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarList vars, const Rational& c);
    static MultiPoly variable(VarList vars, const std::string& name);
    static MultiPoly monomial(VarList vars, Exponents exps, const Rational& c);

    const VarList& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_constant() const;
    // Constant term (the coefficient of the all-zero exponent vector).
    Rational constant_value() const;

    std::size_t var_index(const std::string& name) const; // throws DomainError
    bool uses_var(const std::string& name) const;
    VarList used_vars() const;

    // nullopt for the zero polynomial (degree sentinel; callers must branch).
    std::optional<long> total_degree() const;
    std::optional<long> degree_in(const std::string& var) const;

    struct Homogeneity {
        bool zero = false;              // distinguished flag for the zero polynomial
        std::optional<long> degree;     // set iff nonzero and homogeneous
    };
    Homogeneity homogeneous_degree() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned long exponent) const;
    bool operator==(const MultiPoly& rhs) const { return vars_ == rhs.vars_ && terms_ == rhs.terms_; }
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    MultiPoly partial(const std::string& var) const;
    Rational eval(const std::vector<Rational>& point) const;
    // Replaces `var` by `value` (same variable list).
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
    MultiPoly substitute(const std::string& var, const Rational& value) const;
    // Coefficients as polynomials in the remaining variables (exponent of
    // `var` is zero in every returned term), keyed by the power of `var`.
    std::map<long, MultiPoly> coefficients_in(const std::string& var) const;
    MultiPoly coefficient_of(const std::string& var, long power) const;
    // Leading coefficient with respect to `var`.
    MultiPoly leading_coefficient_in(const std::string& var) const;

    // Projects onto a smaller variable list; every dropped variable must be
    // unused. `new_vars` must be a subsequence of vars().
    MultiPoly restricted_to(const VarList& new_vars) const;
    // Re-expresses the polynomial over a superset variable list.
    MultiPoly extended_to(const VarList& new_vars) const;

    // Positive gcd of all coefficients (0 for the zero polynomial).
    Rational content() const;
    // Divides by the content and normalizes the leading (greatest exponent
    // vector) coefficient to be positive. Zero stays zero.
    MultiPoly primitive_normalized() const;

    std::string to_string() const;

private:
    void add_term(const Exponents& exps, const Rational& c);
    VarList vars_;
    std::map<Exponents, Rational> terms_;
    friend MultiPoly parse_poly(const std::string&, const VarList&);
};

// Parses the expression grammar:
//   expr := term (('+'|'-') term)*
//   term := factor ('*'? factor)*
//   factor := rational | var | '(' expr ')' | factor '^' uint
//   rational := int ('/' posint)?
// (unary minus before a factor is accepted as well). Throws PolyParseError
// with position on syntax errors and unknown variable names.
MultiPoly parse_poly(const std::string& text, const VarList& vars);

} // namespace hilbnef

#endif
