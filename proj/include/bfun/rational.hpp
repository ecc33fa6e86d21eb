#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "bfun/errors.hpp"

namespace bfun {

// Exact arbitrary-precision scalars with eager (non-expression-template)
// arithmetic. The rational backend keeps the canonical form we rely on
// everywhere: denominator > 0 and gcd(|num|, den) = 1. No floating point is
// used anywhere in the toolkit.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// p/q for any nonzero q (the raw two-argument constructor rejects q < 0).
inline Rational make_rational(const Int& p, const Int& q) {
    if (q == 0) throw PreconditionViolated("rational with zero denominator");
    return Rational(p) / Rational(q);
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// Largest integer <= q.
inline Int floor_int(const Rational& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n < 0 && n % d != 0) --t;
    return t;
}

/// Smallest integer >= q.
inline Int ceil_int(const Rational& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n > 0 && n % d != 0) ++t;
    return t;
}

/// Serialize as "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rational& q) {
    std::string s = num(q).str();
    if (!is_integer(q)) {
        s += "/";
        s += den(q).str();
    }
    return s;
}

/// Parse "p" or "p/q" (optional leading sign on p).
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw PreconditionViolated("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) -> Int {
        if (part.empty()) bad();
        bool negative = false;
        if (part[0] == '+' || part[0] == '-') {
            negative = part[0] == '-';
            part.remove_prefix(1);
        }
        if (part.empty()) bad();
        for (char c : part)
            if (c < '0' || c > '9') bad();
        Int v{std::string(part)};
        if (negative) v *= -1;
        return v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int p = parse_int(text.substr(0, slash));
    Int q = parse_int(text.substr(slash + 1));
    if (q == 0) bad();
    return make_rational(p, q);
}

} // namespace bfun
