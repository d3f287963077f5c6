#include "resultant.hpp"

#include "errors.hpp"

#include <algorithm>

namespace hilbnef {

namespace {

bool lead_divides(const Exponents& den, const Exponents& num) {
    for (std::size_t i = 0; i < den.size(); ++i)
        if (den[i] > num[i]) return false;
    return true;
}

// Dense univariate view (coefficients low -> high) used by gcd machinery.
std::vector<Rational> to_dense(const MultiPoly& f, const std::string& var) {
    long deg = f.degree_in(var).value_or(0);
    std::vector<Rational> out(static_cast<std::size_t>(deg) + 1, Rational(0));
    std::size_t vi = f.var_index(var);
    for (const auto& [e, c] : f.terms()) out[e[vi]] += c;
    return out;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero), over Q.
std::vector<Rational> dense_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

std::vector<Rational> dense_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = dense_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

MultiPoly from_dense(const std::vector<Rational>& coeffs, const VarList& vars, const std::string& var) {
    MultiPoly out(vars);
    MultiPoly x = MultiPoly::variable(vars, var);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k] == 0) continue;
        out += x.pow(k).scaled(coeffs[k]);
    }
    return out;
}

// The single variable the squarefree/gcd machinery may use. Throws if the
// polynomial genuinely involves more than one variable.
std::string single_used_var(const MultiPoly& f, const MultiPoly& g) {
    VarList used = f.used_vars();
    for (const auto& v : g.used_vars())
        if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    if (used.size() > 1) throw DomainError("expected polynomials in a single shared variable");
    if (used.empty()) {
        if (f.vars().empty()) throw DomainError("polynomial has no variables");
        return f.vars().front();
    }
    return used.front();
}

} // namespace

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    MultiPoly rem = a;
    MultiPoly quot(a.vars());
    if (b.vars() != a.vars()) throw DomainError("polynomials are over different variable lists");
    while (!rem.is_zero()) {
        const auto& [le, lc] = *rem.terms().rbegin();
        const auto& [be, bc] = *b.terms().rbegin();
        if (!lead_divides(be, le)) throw DomainError("inexact polynomial division");
        Exponents q(le.size());
        for (std::size_t i = 0; i < q.size(); ++i) q[i] = le[i] - be[i];
        MultiPoly qt = MultiPoly::monomial(a.vars(), q, lc / bc);
        rem -= qt * b;
        quot += qt;
    }
    return quot;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("matrix is not square");
    const VarList& vars = m[0][0].vars();
    MultiPoly prev = MultiPoly::constant(vars, 1);
    int det_sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return MultiPoly(vars); // singular
            std::swap(m[k], m[pivot]);
            det_sign = -det_sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
            m[i][k] = MultiPoly(vars);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return det_sign < 0 ? -det : det;
}

MultiPoly resultant_from_coefficients(const std::vector<MultiPoly>& f_coeffs,
                                      const std::vector<MultiPoly>& g_coeffs) {
    if (f_coeffs.size() < 2 || g_coeffs.size() < 2)
        throw DomainError("resultant needs formal degree at least one on both sides");
    const std::size_t df = f_coeffs.size() - 1;
    const std::size_t dg = g_coeffs.size() - 1;
    const VarList& vars = f_coeffs[0].vars();
    const std::size_t n = df + dg;
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t j = 0; j <= df; ++j) m[i][i + j] = f_coeffs[j];
    for (std::size_t i = 0; i < df; ++i)
        for (std::size_t j = 0; j <= dg; ++j) m[dg + i][i + j] = g_coeffs[j];
    return bareiss_determinant(std::move(m));
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    long df = f.degree_in(var).value_or(0);
    long dg = g.degree_in(var).value_or(0);
    if (f.is_zero() || g.is_zero() || df < 1 || dg < 1)
        throw DomainError("resultant requires positive degree in '" + var + "' on both sides");
    std::vector<MultiPoly> fc, gc;
    for (long k = df; k >= 0; --k) fc.push_back(f.coefficient_of(var, k));
    for (long k = dg; k >= 0; --k) gc.push_back(g.coefficient_of(var, k));
    return resultant_from_coefficients(fc, gc);
}

MultiPoly discriminant(const MultiPoly& f, const std::string& var) {
    long m = f.degree_in(var).value_or(0);
    if (m < 2) throw DomainError("discriminant requires degree >= 2 in '" + var + "'");
    MultiPoly res = resultant(f, f.partial(var), var);
    MultiPoly disc = divide_exact(res, f.leading_coefficient_in(var));
    return ((m * (m - 1) / 2) % 2 != 0) ? -disc : disc;
}

MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    std::string var = single_used_var(a, b);
    auto g = dense_gcd(to_dense(a, var), to_dense(b, var));
    return from_dense(g, a.vars(), var);
}

bool is_squarefree(const MultiPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree test of the zero polynomial");
    VarList used = f.used_vars();
    if (used.empty()) return true; // nonzero constant
    if (used.size() == 1) {
        const std::string& v = used.front();
        MultiPoly g = gcd_univariate(f, f.partial(v));
        return g.total_degree().value_or(0) == 0;
    }
    if (used.size() == 2) {
        auto h = f.homogeneous_degree();
        if (!h.degree)
            throw DomainError("squarefree test needs a univariate polynomial or a binary form");
        const std::string& v1 = used[0];
        const std::string& v2 = used[1];
        MultiPoly chart1 = f.substitute(v2, Rational(1));
        MultiPoly chart2 = f.substitute(v1, Rational(1));
        long infinity_mult = *h.degree - f.degree_in(v1).value_or(0);
        return is_squarefree(chart1) && is_squarefree(chart2) && infinity_mult <= 1;
    }
    throw DomainError("squarefree test needs a univariate polynomial or a binary form");
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    VarList used = f.used_vars();
    if (used.empty()) return MultiPoly::constant(f.vars(), 1);
    if (used.size() != 1) throw DomainError("squarefree part needs a univariate polynomial");
    MultiPoly g = gcd_univariate(f, f.partial(used.front()));
    return divide_exact(f, g);
}

} // namespace hilbnef
