#include "rational.hpp"

#include "errors.hpp"

#include <cctype>

namespace hilbnef {

Rational rational_from_string(const std::string& text) {
    std::size_t i = 0;
    auto digits = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw PolyParseError(i, std::string("expected ") + what);
        return text.substr(start, i - start);
    };

    std::string num;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') num = "-";
        ++i;
    }
    num += digits("integer numerator");
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = digits("positive integer denominator");
    }
    if (i != text.size()) throw PolyParseError(i, "trailing characters in rational");

    Integer d(den);
    if (d == 0) throw PolyParseError(0, "zero denominator");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

} // namespace hilbnef
