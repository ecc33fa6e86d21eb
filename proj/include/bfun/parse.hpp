#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "bfun/mpoly.hpp"

namespace bfun {

namespace detail {

/// Recursive-descent parser for the small polynomial grammar: +, -, *,
/// ^ with non-negative integer exponents, parentheses, integer or p/q
/// rational literals, juxtaposition as multiplication, and variables
/// x, y, z (n <= 3) or x1..xn. Division only occurs inside a rational literal.
class PolyParser {
public:
    PolyParser(std::string_view text, unsigned nvars) : text_(text), nvars_(nvars) {}

    MPoly parse() {
        MPoly p = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw PreconditionViolated("unexpected character '" + std::string(1, text_[pos_]) +
                                       "' in polynomial at position " + std::to_string(pos_));
        return p;
    }

private:
    MPoly expression() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        MPoly acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                MPoly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                take();
                acc = acc * factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor(); // juxtaposition
            } else {
                return acc;
            }
        }
    }

    MPoly factor() {
        MPoly base = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            unsigned e = integer();
            return base.pow(e);
        }
        return base;
    }

    MPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            MPoly p = expression();
            skip_ws();
            if (peek() != ')') throw PreconditionViolated("missing ')' in polynomial");
            take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = digits();
            skip_ws();
            if (peek() == '/') {
                take();
                skip_ws();
                lit += "/" + digits();
            }
            return MPoly::constant(nvars_, parse_rational(lit));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        throw PreconditionViolated("expected a polynomial atom at position " +
                                   std::to_string(pos_));
    }

    MPoly variable() {
        char c = take();
        unsigned index;
        if (c == 'x' && std::isdigit(static_cast<unsigned char>(peek()))) {
            index = integer();
            if (index == 0) throw PreconditionViolated("variables are numbered from x1");
            --index;
        } else if (c == 'x') {
            index = 0;
        } else if (c == 'y') {
            index = 1;
        } else if (c == 'z') {
            index = 2;
        } else {
            throw PreconditionViolated("unknown variable '" + std::string(1, c) + "'");
        }
        if (index >= nvars_)
            throw PreconditionViolated("variable index exceeds the declared variable count");
        return MPoly::variable(nvars_, index);
    }

    unsigned integer() {
        std::string d = digits();
        return static_cast<unsigned>(std::stoul(d));
    }

    std::string digits() {
        skip_ws();
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out += take();
        if (out.empty()) throw PreconditionViolated("expected digits at position " +
                                                    std::to_string(pos_));
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    std::string_view text_;
    unsigned nvars_;
    size_t pos_ = 0;
};

} // namespace detail

/// Parse "x^2+y^3", "3/2*x*y - 1", "(x+y)^2" and the like into an MPoly.
inline MPoly parse_mpoly(std::string_view text, unsigned nvars) {
    return detail::PolyParser(text, nvars).parse();
}

} // namespace bfun
