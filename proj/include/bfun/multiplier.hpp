#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bfun/resolution.hpp"
#include "bfun/weyl.hpp"

namespace bfun {

/// g is a section of the multiplier ideal I(f^lambda) iff
/// b_i + k_i >= floor(lambda a_i) for every record of the resolution table.
inline bool multiplier_membership(const ResolutionData& res, const Rational& lambda) {
    if (lambda <= 0) throw PreconditionViolated("multiplier exponent must be positive");
    for (const auto& d : res.divisors) {
        if (Int(d.b) + Int(d.k) < floor_int(lambda * Rational(d.a))) return false;
    }
    return true;
}

/// Multiplier ideal of a monomial f under its identity resolution: principal,
/// generated by the monomial with exponents floor(lambda a_i).
struct MonomialIdealSNC {
    Exponents generator;

    bool contains_monomial(const Exponents& e) const {
        if (e.size() != generator.size())
            throw VariableMismatch("monomial arity differs from the ideal's");
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < generator[i]) return false;
        return true;
    }

    bool operator==(const MonomialIdealSNC&) const = default;
};

inline MonomialIdealSNC multiplier_ideal_snc(const std::vector<unsigned>& a,
                                             const Rational& lambda) {
    if (lambda <= 0) throw PreconditionViolated("multiplier exponent must be positive");
    MonomialIdealSNC ideal;
    for (unsigned ai : a)
        ideal.generator.push_back(
            static_cast<unsigned>(floor_int(lambda * Rational(ai))));
    return ideal;
}

/// Log canonical threshold of f along g: min (k_i + 1 + b_i)/a_i, the least
/// lambda at which membership fails.
inline Rational lct_g(const ResolutionData& res) {
    if (!res.has_positive_a())
        throw PreconditionViolated("no record with a > 0; f is invertible");
    return -root_upper_bound_m0(res);
}

/// All jumping numbers in (0, T] of a monomial f with exponent vector a,
/// computed from the identity resolution: the floors floor(lambda a_i) change
/// exactly at the points j/a_i.
inline std::vector<Rational> jumping_numbers_snc(const std::vector<unsigned>& a,
                                                 const Rational& T) {
    bool nonzero = false;
    for (unsigned ai : a) nonzero = nonzero || ai > 0;
    if (!nonzero) throw PreconditionViolated("exponent vector is zero");
    if (T <= 0) throw PreconditionViolated("threshold must be positive");
    std::set<Rational> pts;
    for (unsigned ai : a) {
        if (ai == 0) continue;
        Int jmax = floor_int(T * Rational(ai));
        for (Int j = 1; j <= jmax; ++j) pts.insert(Rational(j, Int(ai)));
    }
    return std::vector<Rational>(pts.begin(), pts.end());
}

/// Level of an element in the V-filtration: the supremum of alpha with
/// u in V^alpha, which equals minus the largest root of its b-function.
struct VLevel {
    Rational value;
    bool operator==(const VLevel&) const = default;
};

inline VLevel v_level_from_bfunction(const BFunction& b) {
    if (b.is_one()) throw PreconditionViolated("V-level of the empty b-function");
    return VLevel{-b.largest_root()};
}

/// Minimal exponent from the b-function of f: minus the largest root of the
/// reduced b-function, infinite (nullopt) when b = s + 1 (smooth hypersurface).
inline std::optional<Rational> min_exponent_from_bfunction(const BFunction& b_f) {
    BFunction reduced = reduced_bfunction(b_f); // throws MissingRootMinusOne
    if (reduced.is_one()) return std::nullopt;
    return -reduced.largest_root();
}

/// Divisibility sandwich for the b-function of (d/dt)^m f^s: it divides
/// (s+1) * btilde_f(s - m) and is divisible by btilde_f(s - m), so its roots
/// sit between the two returned root multisets.
struct SandwichBounds {
    BFunction lower; // btilde_f shifted by m
    BFunction upper; // lower plus one root at -1
};

inline SandwichBounds sandwich_for_shifted(const BFunction& b_f, unsigned m) {
    BFunction lower = reduced_bfunction(b_f).shifted(Rational(m));
    BFunction upper = lower;
    upper.add_root(Rational(-1));
    return SandwichBounds{std::move(lower), std::move(upper)};
}

/// Exact evaluation of floor((alpha - eps) a) for infinitesimally small
/// eps > 0: one less than alpha*a when that is an integer, its floor otherwise.
inline Int floor_minus_epsilon(const Rational& alpha, unsigned a) {
    Rational t = alpha * Rational(a);
    if (is_integer(t)) return num(t) - 1;
    return floor_int(t);
}

/// Two-sided check of the multiplier-ideal / V-filtration correspondence for
/// a monomial f: side A collects the monomials g (exponents up to cap) whose
/// oracle V-level is >= alpha, side B those inside I(f^(alpha - eps)) by the
/// floor formula. The correspondence predicts an empty symmetric difference.
struct BudurSaitoReport {
    Rational alpha;
    std::vector<Exponents> side_a;
    std::vector<Exponents> side_b;
    std::vector<Exponents> symmetric_difference;
    std::vector<std::pair<Exponents, BFunction>> per_monomial_b;
};

/// Cache of oracle b-functions per monomial exponent; one multiplier check at
/// several levels alpha reuses the same solves.
using MonomialOracleCache = std::map<Exponents, BFunction>;

inline BudurSaitoReport budur_saito_check(const std::vector<unsigned>& a, const Rational& alpha,
                                          unsigned degree_cap, MonomialOracleCache& cache) {
    if (alpha <= 0) throw PreconditionViolated("alpha must be positive");
    const unsigned n = static_cast<unsigned>(a.size());
    MPoly f(n), one = MPoly::constant(n, Rational(1));
    {
        Exponents e(a.begin(), a.end());
        f = MPoly::monomial(n, e, Rational(1));
    }

    std::vector<Int> threshold(n);
    for (unsigned i = 0; i < n; ++i) threshold[i] = floor_minus_epsilon(alpha, a[i]);

    BudurSaitoReport report;
    report.alpha = alpha;

    Exponents g(n, 0);
    auto visit = [&](auto&& self, unsigned pos) -> void {
        if (pos == n) {
            auto it = cache.find(g);
            if (it == cache.end()) {
                MPoly gp = MPoly::monomial(n, g, Rational(1));
                it = cache.emplace(g, solve_bfunction(f, gp, monomial_oracle_bounds(a)).b)
                         .first;
            }
            const BFunction& b = it->second;
            report.per_monomial_b.emplace_back(g, b);
            const bool in_a = v_level_from_bfunction(b).value >= alpha;
            bool in_b = true;
            for (unsigned i = 0; i < n; ++i)
                if (Int(g[i]) < threshold[i]) in_b = false;
            if (in_a) report.side_a.push_back(g);
            if (in_b) report.side_b.push_back(g);
            if (in_a != in_b) report.symmetric_difference.push_back(g);
            return;
        }
        for (unsigned e = 0; e <= degree_cap; ++e) {
            g[pos] = e;
            self(self, pos + 1);
        }
        g[pos] = 0;
    };
    visit(visit, 0);
    return report;
}

inline BudurSaitoReport budur_saito_check(const std::vector<unsigned>& a, const Rational& alpha,
                                          unsigned degree_cap) {
    MonomialOracleCache cache;
    return budur_saito_check(a, alpha, degree_cap, cache);
}

/// Numerical confirmation of the minimal-exponent criterion: write the
/// resolution lower bound as m + alpha with alpha in (0, 1], and check that
/// every root of both sandwich polynomials at that m is <= -alpha or is a
/// negative integer. An unbounded lower bound degenerates to true.
inline bool saito_criterion_check(const BFunction& b_f, const ResolutionData& res) {
    auto bound = min_exponent_lower_bound(res); // throws HypothesisViolated
    if (!bound) return true;
    Int m_int = ceil_int(*bound) - 1;
    if (m_int < 0) m_int = 0;
    const unsigned m = static_cast<unsigned>(m_int);
    const Rational alpha = *bound - Rational(m);

    SandwichBounds sandwich = sandwich_for_shifted(b_f, m);
    auto admissible = [&](const Rational& root) {
        if (root <= -alpha) return true;
        return root < 0 && is_integer(root);
    };
    for (const auto* side : {&sandwich.lower, &sandwich.upper})
        for (const auto& [root, mult] : side->roots())
            if (!admissible(root)) return false;
    return true;
}

} // namespace bfun
