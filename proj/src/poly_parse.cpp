#include "polyerg/poly_parse.hpp"

#include <cctype>

namespace polyerg {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ArgumentError("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    IntPolynomial parse_expr() {
        IntPolynomial acc = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    IntPolynomial parse_term() {
        IntPolynomial acc = parse_power();
        while (eat('*')) acc = acc * parse_power();
        return acc;
    }

    IntPolynomial parse_power() {
        IntPolynomial base = parse_atom();
        if (eat('^')) {
            Int e = parse_int_literal();
            if (e < 0) fail("negative exponent");
            if (e > 64) fail("exponent too large");
            IntPolynomial r = IntPolynomial::constant(Int(1));
            for (Int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    IntPolynomial parse_atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            IntPolynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'n') {
            ++pos;
            return IntPolynomial::variable();
        }
        if (c == '-') {
            eat('-');
            return -parse_power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return IntPolynomial::constant(parse_int_literal());
        fail("expected integer, 'n' or '('");
    }

    Int parse_int_literal() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer literal");
        Int v(s.substr(start, pos - start));
        return neg ? Int(-v) : v;
    }
};

}  // namespace

IntPolynomial parse_polynomial(const std::string& text) {
    Parser p(text);
    IntPolynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace polyerg
