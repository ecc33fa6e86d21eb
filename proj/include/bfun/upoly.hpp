#pragma once

#include <utility>
#include <vector>

#include "bfun/rational.hpp"

namespace bfun {

// Univariate polynomial over the rationals: coefficient of s^i at index i,
// no trailing zero coefficients (the zero polynomial is the empty vector).
using UPoly = std::vector<Rational>;

inline void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool upoly_is_zero(const UPoly& p) { return p.empty(); }

/// Degree, with deg 0 for constants; -1 for the zero polynomial.
inline int upoly_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly upoly_const(const Rational& c) {
    UPoly p;
    if (c != 0) p.push_back(c);
    return p;
}

inline UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    upoly_trim(r);
    return r;
}

inline UPoly upoly_scale(const UPoly& a, const Rational& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline UPoly upoly_sub(const UPoly& a, const UPoly& b) {
    return upoly_add(a, upoly_scale(b, Rational(-1)));
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    upoly_trim(r);
    return r;
}

inline Rational upoly_eval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline UPoly upoly_derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(i);
    return r;
}

/// Division with remainder over the field of rationals; divisor must be nonzero.
inline std::pair<UPoly, UPoly> upoly_divrem(UPoly a, const UPoly& b) {
    if (b.empty()) throw PreconditionViolated("division by the zero polynomial");
    UPoly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        const size_t i = k + b.size() - 1;
        if (a[i] == 0) continue;
        Rational c = a[i] / lead;
        q[k] = c;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    upoly_trim(a);
    return {q, a};
}

inline UPoly upoly_monic(UPoly p) {
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly upoly_gcd(UPoly a, UPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        UPoly r = upoly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(std::move(a));
}

} // namespace bfun
