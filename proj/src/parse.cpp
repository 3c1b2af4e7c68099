#include "riccati/parse.hpp"

#include <cctype>
#include <sstream>

namespace riccati {

namespace {

template <typename Value>
struct ExprParser {
    std::string_view src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& message, std::size_t at) {
        throw Error(Errc::syntax_error, message, at);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) {
            ++pos;
        }
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool is_digit(char c) const { return c >= '0' && c <= '9'; }

    unsigned long parse_uint(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && is_digit(src[pos])) ++pos;
        if (pos == start) fail(std::string("expected ") + what, start);
        unsigned long value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + static_cast<unsigned long>(src[i] - '0');
            if (value > 1000000) fail("number out of range", start);
        }
        return value;
    }

    Rational parse_rational_literal() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && is_digit(src[pos])) ++pos;
        mpz_class num(std::string(src.substr(start, pos - start)), 10);
        if (pos < src.size() && src[pos] == '/') {
            // a rational literal, "p/q"
            std::size_t slash = pos;
            ++pos;
            std::size_t dstart = pos;
            while (pos < src.size() && is_digit(src[pos])) ++pos;
            if (pos == dstart) fail("expected denominator digits", slash + 1);
            mpz_class den(std::string(src.substr(dstart, pos - dstart)), 10);
            if (den == 0) fail("zero denominator", dstart);
            return Rational(num, den);
        }
        return Rational(num, mpz_class(1));
    }

    bool starts_atom() {
        char c = peek();
        if (c == '(' || is_digit(c)) return true;
        if constexpr (std::is_same_v<Value, Poly>) {
            return c == 'x';
        } else {
            return c == 'c' || c == 's';
        }
    }

    Value parse_full() {
        Value v = parse_expr();
        skip_ws();
        if (pos != src.size()) fail("unexpected trailing input", pos);
        return v;
    }

    Value parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = src[pos] == '-';
            ++pos;
        }
        Value acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Value rhs = parse_term();
                if (c == '+') acc += rhs;
                else acc -= rhs;
            } else {
                return acc;
            }
        }
    }

    Value parse_term() {
        Value acc = parse_power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * parse_power();
            } else if (starts_atom()) {  // implicit multiplication
                acc = acc * parse_power();
            } else {
                return acc;
            }
        }
    }

    Value parse_power() {
        Value base = parse_atom();
        skip_ws();
        if (pos < src.size() && src[pos] == '^') {
            ++pos;
            skip_ws();
            if (pos >= src.size() || !is_digit(src[pos])) {
                fail("exponent must be a nonnegative integer", pos);
            }
            return pow_value(base, parse_uint("exponent"));
        }
        return base;
    }

    static Poly pow_value(const Poly& base, unsigned long e) {
        return base.pow(static_cast<unsigned>(e));
    }

    static TrigPoly pow_value(const TrigPoly& base, unsigned long e) {
        TrigPoly acc = TrigPoly::constant(Rational(1));
        for (unsigned long i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    Value parse_atom() {
        char c = peek();
        std::size_t at = pos;
        if (c == '(') {
            ++pos;
            Value inner = parse_expr();
            if (peek() != ')') fail("expected ')'", pos);
            ++pos;
            return inner;
        }
        if (is_digit(c)) {
            Rational r = parse_rational_literal();
            if constexpr (std::is_same_v<Value, Poly>) {
                return Poly::constant(r);
            } else {
                return TrigPoly::constant(r);
            }
        }
        if constexpr (std::is_same_v<Value, Poly>) {
            if (c == 'x') {
                ++pos;
                return Poly::x();
            }
            fail("expected a number, x, or '('", at);
        } else {
            if (c == 'c' || c == 's') return parse_trig_atom();
            fail("expected a number, cos(..), sin(..), or '('", at);
        }
    }

    TrigPoly parse_trig_atom() {
        skip_ws();
        std::size_t at = pos;
        bool is_cos;
        if (src.substr(pos, 3) == "cos") {
            is_cos = true;
        } else if (src.substr(pos, 3) == "sin") {
            is_cos = false;
        } else {
            fail("expected cos or sin", at);
        }
        pos += 3;
        if (peek() != '(') fail("expected '(' after cos/sin", pos);
        ++pos;
        skip_ws();
        unsigned long k = 1;
        if (pos < src.size() && is_digit(src[pos])) {
            std::size_t kstart = pos;
            k = parse_uint("harmonic");
            if (pos < src.size() && src[pos] == '.') {
                fail("harmonic must be an integer", pos);
            }
            if (k < 1) fail("harmonic must be at least 1", kstart);
            skip_ws();
            if (pos < src.size() && src[pos] == '*') {
                ++pos;
            }
        }
        skip_ws();
        if (src.substr(pos, 5) == "theta") {
            pos += 5;
        } else if (pos < src.size() && src[pos] == 't') {
            ++pos;
        } else {
            fail("expected the angle variable t or theta", pos);
        }
        if (peek() != ')') fail("expected ')'", pos);
        ++pos;
        int harmonic = static_cast<int>(k);
        return is_cos ? TrigPoly::cosine(harmonic) : TrigPoly::sine(harmonic);
    }
};

}  // namespace

Poly parse_poly_expr(std::string_view src) {
    ExprParser<Poly> parser{src};
    return parser.parse_full();
}

TrigPoly parse_trig_expr(std::string_view src) {
    ExprParser<TrigPoly> parser{src};
    return parser.parse_full();
}

std::string to_string(const Rational& r) { return r.to_string(); }

std::string to_string(const Poly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::string to_string(const TrigPoly& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

}  // namespace riccati
