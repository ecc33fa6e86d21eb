#pragma once

#include <map>
#include <string>
#include <vector>

#include "bfun/rational.hpp"
#include "bfun/upoly.hpp"

namespace bfun {

/// Monic polynomial in s represented as a multiset of rational roots with
/// multiplicities. The empty multiset is the constant polynomial 1.
class BFunction {
public:
    using RootMap = std::map<Rational, unsigned>;

    BFunction() = default;

    static BFunction from_roots(std::initializer_list<Rational> roots) {
        BFunction b;
        for (const auto& r : roots) b.add_root(r);
        return b;
    }

    void add_root(const Rational& r, unsigned mult = 1) {
        if (mult == 0) return;
        roots_[r] += mult;
    }

    const RootMap& roots() const { return roots_; }
    bool is_one() const { return roots_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [r, m] : roots_) d += m;
        return d;
    }

    unsigned multiplicity(const Rational& r) const {
        auto it = roots_.find(r);
        return it == roots_.end() ? 0 : it->second;
    }

    bool has_root(const Rational& r) const { return multiplicity(r) > 0; }

    Rational largest_root() const {
        if (roots_.empty()) throw PreconditionViolated("largest root of the constant 1");
        return roots_.rbegin()->first;
    }

    /// Multiset containment: this divides other iff every root of this appears
    /// in other with at least the same multiplicity.
    bool divides(const BFunction& other) const {
        for (const auto& [r, m] : roots_)
            if (other.multiplicity(r) < m) return false;
        return true;
    }

    /// Expand to the monic coefficient vector of prod (s - root)^mult.
    UPoly expand() const {
        UPoly p{Rational(1)};
        for (const auto& [r, m] : roots_)
            for (unsigned i = 0; i < m; ++i) p = upoly_mul(p, UPoly{-r, Rational(1)});
        return p;
    }

    BFunction shifted(const Rational& delta) const {
        BFunction b;
        for (const auto& [r, m] : roots_) b.add_root(r + delta, m);
        return b;
    }

    /// Canonical rendering order: the forced factors at -1 first, then the
    /// remaining roots in descending order.
    std::vector<Rational> root_list() const {
        std::vector<Rational> out;
        const Rational minus_one(-1);
        for (unsigned i = 0; i < multiplicity(minus_one); ++i) out.push_back(minus_one);
        for (auto it = roots_.rbegin(); it != roots_.rend(); ++it) {
            if (it->first == minus_one) continue;
            for (unsigned i = 0; i < it->second; ++i) out.push_back(it->first);
        }
        return out;
    }

    /// Factored form, e.g. "(s+1)(s+5/6)(s+7/6)" or "(s+1)^2".
    std::string factored_string() const {
        if (roots_.empty()) return "1";
        std::string out;
        auto emit = [&](const Rational& r, unsigned m) {
            std::string base;
            if (r == 0) {
                base = "s";
            } else if (r < 0) {
                base = "(s+" + rat_to_string(-r) + ")";
            } else {
                base = "(s-" + rat_to_string(r) + ")";
            }
            if (r == 0 && m > 1) base = "(" + base + ")";
            out += base;
            if (m > 1) out += "^" + std::to_string(m);
        };
        const Rational minus_one(-1);
        if (unsigned m = multiplicity(minus_one)) emit(minus_one, m);
        for (auto it = roots_.rbegin(); it != roots_.rend(); ++it)
            if (it->first != minus_one) emit(it->first, it->second);
        return out;
    }

    bool operator==(const BFunction& o) const { return roots_ == o.roots_; }
    bool operator!=(const BFunction& o) const { return !(*this == o); }

private:
    RootMap roots_;
};

namespace detail {

/// Positive divisors of |n|, n != 0, by trial division.
inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

/// Evaluate an integer-coefficient polynomial at p/q without rationals:
/// sum c_i p^i q^(deg-i).
inline Int eval_homogenized(const std::vector<Int>& c, const Int& p, const Int& q) {
    Int acc = 0;
    Int ppow = 1;
    std::vector<Int> qpow(c.size());
    qpow[c.size() - 1] = 1;
    for (size_t i = c.size() - 1; i-- > 0;) qpow[i] = qpow[i + 1] * q;
    for (size_t i = 0; i < c.size(); ++i) {
        acc += c[i] * ppow * qpow[i];
        ppow *= p;
    }
    return acc;
}

} // namespace detail

/// Full rational root multiset of a nonzero monic univariate polynomial.
/// Throws IrreducibleRemainder if a nonlinear factor with no rational root
/// remains; valid b-functions always split completely.
inline BFunction factor_rational_roots(const UPoly& input) {
    UPoly p = input;
    upoly_trim(p);
    if (p.empty()) throw PreconditionViolated("factoring the zero polynomial");
    if (p.back() != 1) throw PreconditionViolated("factoring requires a monic polynomial");

    BFunction result;

    // roots at zero
    size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    if (z > 0) {
        result.add_root(Rational(0), static_cast<unsigned>(z));
        p.erase(p.begin(), p.begin() + z);
    }

    while (p.size() > 1) {
        // primitive integer form
        Int lcm_den = 1;
        for (const auto& c : p) lcm_den = boost::multiprecision::lcm(lcm_den, den(c));
        std::vector<Int> ic(p.size());
        for (size_t i = 0; i < p.size(); ++i) ic[i] = num(p[i]) * (lcm_den / den(p[i]));
        Int content = 0;
        for (const auto& c : ic) content = boost::multiprecision::gcd(content, c);
        for (auto& c : ic) c /= content;

        // rational root theorem: root = +- d0/dk with d0 | |c_0|, dk | |c_lead|
        bool found = false;
        Rational root;
        for (const Int& d0 : detail::positive_divisors(ic.front())) {
            for (const Int& dk : detail::positive_divisors(ic.back())) {
                if (boost::multiprecision::gcd(d0, dk) != 1) continue;
                if (detail::eval_homogenized(ic, d0, dk) == 0) {
                    root = Rational(d0, dk);
                    found = true;
                } else if (detail::eval_homogenized(ic, -d0, dk) == 0) {
                    root = Rational(-d0, dk);
                    found = true;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw IrreducibleRemainder("no rational root in remaining factor of degree " +
                                       std::to_string(p.size() - 1));

        const UPoly linear{-root, Rational(1)};
        unsigned mult = 0;
        while (true) {
            auto [q, r] = upoly_divrem(p, linear);
            if (!r.empty()) break;
            p = q;
            ++mult;
        }
        result.add_root(root, mult);
    }
    return result;
}

} // namespace bfun
