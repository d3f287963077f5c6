#include "multipoly.hpp"

#include "errors.hpp"

#include <algorithm>
#include <sstream>

namespace hilbnef {

namespace {

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars())
        throw DomainError("polynomials are over different variable lists");
}

} // namespace

MultiPoly MultiPoly::constant(VarList vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(VarList vars, Exponents exps, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw DomainError("exponent vector length does not match variable list");
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](unsigned e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::uses_var(const std::string& name) const {
    std::size_t i = var_index(name);
    for (const auto& [e, c] : terms_)
        if (e[i] > 0) return true;
    return false;
}

VarList MultiPoly::used_vars() const {
    VarList used;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (const auto& [e, c] : terms_) {
            if (e[i] > 0) {
                used.push_back(vars_[i]);
                break;
            }
        }
    }
    return used;
}

std::optional<long> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    long best = 0;
    for (const auto& [e, c] : terms_) {
        long deg = 0;
        for (unsigned k : e) deg += k;
        best = std::max(best, deg);
    }
    return best;
}

std::optional<long> MultiPoly::degree_in(const std::string& var) const {
    if (terms_.empty()) return std::nullopt;
    std::size_t i = var_index(var);
    long best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<long>(e[i]));
    return best;
}

MultiPoly::Homogeneity MultiPoly::homogeneous_degree() const {
    Homogeneity h;
    if (terms_.empty()) {
        h.zero = true;
        return h;
    }
    std::optional<long> common;
    for (const auto& [e, c] : terms_) {
        long deg = 0;
        for (unsigned k : e) deg += k;
        if (!common)
            common = deg;
        else if (*common != deg)
            return h; // mixed degrees: not homogeneous
    }
    h.degree = common;
    return h;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_vars(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_vars(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    require_same_vars(lhs, rhs);
    MultiPoly out(lhs.vars_);
    Exponents e(lhs.vars_.size());
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned long exponent) const {
    MultiPoly result = MultiPoly::constant(vars_, 1);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::partial(const std::string& var) const {
    std::size_t i = var_index(var);
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        out.add_term(d, c * static_cast<long>(e[i]));
    }
    return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw DomainError("evaluation point has wrong number of coordinates");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    require_same_vars(*this, value);
    auto coeffs = coefficients_in(var);
    // Horner evaluation in `value`.
    long top = coeffs.empty() ? 0 : coeffs.rbegin()->first;
    MultiPoly result(vars_);
    for (long k = top; k >= 0; --k) {
        result = result * value;
        auto it = coeffs.find(k);
        if (it != coeffs.end()) result += it->second;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Rational& value) const {
    return substitute(var, MultiPoly::constant(vars_, value));
}

std::map<long, MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
    std::size_t i = var_index(var);
    std::map<long, MultiPoly> out;
    for (const auto& [e, c] : terms_) {
        long k = e[i];
        Exponents rest = e;
        rest[i] = 0;
        auto [it, inserted] = out.try_emplace(k, vars_);
        it->second.add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, long power) const {
    std::size_t i = var_index(var);
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (static_cast<long>(e[i]) != power) continue;
        Exponents rest = e;
        rest[i] = 0;
        out.add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::leading_coefficient_in(const std::string& var) const {
    auto deg = degree_in(var);
    if (!deg) return MultiPoly(vars_);
    return coefficient_of(var, *deg);
}

MultiPoly MultiPoly::restricted_to(const VarList& new_vars) const {
    std::vector<std::size_t> keep;
    keep.reserve(new_vars.size());
    for (const auto& name : new_vars) keep.push_back(var_index(name));
    // dropped variables must not occur
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (std::find(keep.begin(), keep.end(), i) != keep.end()) continue;
        for (const auto& [e, c] : terms_)
            if (e[i] > 0)
                throw DomainError("cannot drop variable '" + vars_[i] + "': still in use");
    }
    MultiPoly out(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size());
        for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::extended_to(const VarList& new_vars) const {
    std::vector<std::size_t> where;
    where.reserve(vars_.size());
    for (const auto& name : vars_) {
        auto it = std::find(new_vars.begin(), new_vars.end(), name);
        if (it == new_vars.end())
            throw DomainError("extended variable list must contain '" + name + "'");
        where.push_back(static_cast<std::size_t>(it - new_vars.begin()));
    }
    MultiPoly out(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (std::size_t j = 0; j < e.size(); ++j) ne[where[j]] = e[j];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

Rational MultiPoly::content() const {
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(0);
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

MultiPoly MultiPoly::primitive_normalized() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (terms_.rbegin()->second < 0) c = -c;
    return scaled(1 / c);
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent vector first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << rational_to_string(a);
        } else if (a == 1) {
            out << mono;
        } else {
            out << rational_to_string(a) << "*" << mono;
        }
    }
    return out.str();
}

} // namespace hilbnef
