#pragma once

#include <vector>

#include "bfun/bfunction.hpp"
#include "bfun/weyl.hpp"

namespace bfun {

/// Combinatorics of a monomial pair f = prod x_i^{a_i}, g = prod x_i^{b_i}
/// twisted by the m-th derivative power.
struct MonomialData {
    std::vector<unsigned> a;
    std::vector<unsigned> b;
    unsigned m = 0;

    MonomialData(std::vector<unsigned> a_, std::vector<unsigned> b_, unsigned m_ = 0)
        : a(std::move(a_)), b(std::move(b_)), m(m_) {
        if (a.size() != b.size())
            throw VariableMismatch("exponent vectors of f and g differ in length");
    }
};

/// Divisibility bound for any m: roots {-1} together with
/// m - (b_i + j)/a_i for 1 <= j <= a_i (empty inner product when a_i = 0).
inline BFunction monomial_bound_general(const MonomialData& d) {
    BFunction out;
    out.add_root(Rational(-1));
    for (size_t i = 0; i < d.a.size(); ++i)
        for (unsigned j = 1; j <= d.a[i]; ++j)
            out.add_root(Rational(d.m) - Rational(Int(d.b[i]) + j, Int(d.a[i])));
    return out;
}

/// Sharper bound in the untwisted case m = 0: roots -(b_i + j)/a_i.
inline BFunction monomial_bound_m0(const MonomialData& d) {
    if (d.m != 0) throw NonzeroShift("bound only valid for m = 0");
    BFunction out;
    for (size_t i = 0; i < d.a.size(); ++i)
        for (unsigned j = 1; j <= d.a[i]; ++j)
            out.add_root(-Rational(Int(d.b[i]) + j, Int(d.a[i])));
    return out;
}

/// Bound when the first coordinate is a smooth factor (a_1 = 1, b_1 = 0):
/// the first inner product drops out entirely.
inline BFunction monomial_bound_smooth_factor(const MonomialData& d) {
    if (d.a.empty() || d.a[0] != 1 || d.b[0] != 0)
        throw PreconditionViolated("requires a_1 = 1 and b_1 = 0");
    BFunction out;
    out.add_root(Rational(-1));
    for (size_t i = 1; i < d.a.size(); ++i)
        for (unsigned j = 1; j <= d.a[i]; ++j)
            out.add_root(Rational(d.m) - Rational(Int(d.b[i]) + j, Int(d.a[i])));
    return out;
}

/// Shift-divisibility bound: the b-function of the m-th derivative twist
/// divides (s+1) times the reduced b-function shifted by m.
inline BFunction shift_bound(const BFunction& b_gfs, unsigned m) {
    BFunction reduced = reduced_bfunction(b_gfs); // throws MissingRootMinusOne
    BFunction out = reduced.shifted(Rational(m));
    out.add_root(Rational(-1));
    return out;
}

} // namespace bfun
