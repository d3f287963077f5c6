#include "errors.hpp"
#include "multipoly.hpp"

#include <cctype>

namespace hilbnef {

namespace {

// Recursive-descent parser for the expression grammar (see multipoly.hpp).
class Parser {
public:
    Parser(const std::string& text, const VarList& vars) : text_(text), vars_(vars) {}

    MultiPoly run() {
        MultiPoly result = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly parse_expr() {
        bool negate = false;
        if (consume('-'))
            negate = true;
        else
            consume('+');
        MultiPoly acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (consume('+'))
                acc += parse_term();
            else if (consume('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else if (std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
                       c == '_' || c == '(') {
                acc = acc * parse_factor(); // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly parse_factor() {
        if (consume('-')) return -parse_factor();
        MultiPoly base = parse_primary();
        while (peek() == '^') {
            ++pos_;
            base = base.pow(parse_uint());
        }
        return base;
    }

    MultiPoly parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    MultiPoly parse_rational() {
        Integer num(parse_digits());
        Integer den(1);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected positive integer denominator");
            den = Integer(parse_digits());
            if (den == 0) fail("zero denominator");
        }
        Rational value(num, den);
        value.canonicalize();
        return MultiPoly::constant(vars_, value);
    }

    std::string parse_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected non-negative integer exponent");
        std::string digits = parse_digits();
        if (digits.size() > 6) fail("exponent too large");
        return std::stoul(digits);
    }

    MultiPoly parse_variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        for (const auto& v : vars_)
            if (v == name) return MultiPoly::variable(vars_, name);
        pos_ = start;
        fail("unknown variable name '" + name + "'");
    }

    const std::string& text_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(const std::string& text, const VarList& vars) {
    return Parser(text, vars).run();
}

} // namespace hilbnef
