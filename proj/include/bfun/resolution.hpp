#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bfun/rational.hpp"

namespace bfun {

/// One divisor on a strong log resolution: a = multiplicity in the pullback
/// of div(f), k = discrepancy, b = order of g, plus the exceptional flag.
struct DivisorRecord {
    std::string label;
    unsigned a = 0;
    unsigned k = 0;
    unsigned b = 0;
    bool exceptional = false;

    bool operator==(const DivisorRecord&) const = default;
};

/// Combinatorial table of a strong log resolution. The flags record the
/// hypotheses needed by the exceptional-only statements: div(f) reduced and
/// its strict transform smooth. Validity of the table is the caller's
/// responsibility; no geometry is stored.
struct ResolutionData {
    std::vector<DivisorRecord> divisors;
    bool reduced = false;
    bool strict_transform_smooth = false;

    bool operator==(const ResolutionData&) const = default;

    bool has_positive_a() const {
        for (const auto& d : divisors)
            if (d.a > 0) return true;
        return false;
    }
};

/// Candidate roots -(k_i + 1 + l)/a_i over all records with a_i > 0 and
/// 0 <= l <= ell_max. Records with a = 0 contribute nothing (their quotient
/// is infinite).
inline std::set<Rational> lichtin_candidates(const ResolutionData& res, unsigned ell_max) {
    std::set<Rational> out;
    for (const auto& d : res.divisors) {
        if (d.a == 0) continue;
        for (unsigned l = 0; l <= ell_max; ++l)
            out.insert(-Rational(Int(d.k) + 1 + l, Int(d.a)));
    }
    return out;
}

/// True iff root = -(k_i + 1 + l)/a_i for some record and some integer l >= 0.
/// The needed l is solved for exactly, so no truncation parameter enters.
inline bool lichtin_contains(const ResolutionData& res, const Rational& root) {
    for (const auto& d : res.divisors) {
        if (d.a == 0) continue;
        Rational l = -root * Rational(d.a) - Rational(Int(d.k) + 1);
        if (l >= 0 && is_integer(l)) return true;
    }
    return false;
}

/// Upper bound for every root of the b-function of g (d/dt)^m f^s:
/// -min{1, -m + min_i (k_i + 1 + b_i)/a_i}. Reported verbatim, so for large m
/// the bound can be positive.
inline Rational root_upper_bound(const ResolutionData& res, unsigned m) {
    if (!res.has_positive_a())
        throw PreconditionViolated("no record with a > 0; f is invertible");
    std::optional<Rational> inner;
    for (const auto& d : res.divisors) {
        if (d.a == 0) continue;
        Rational q(Int(d.k) + 1 + d.b, Int(d.a));
        if (!inner || q < *inner) inner = q;
    }
    Rational shifted = *inner - Rational(m);
    return -(shifted < 1 ? shifted : Rational(1));
}

/// Sharper bound for m = 0: -min_i (k_i + 1 + b_i)/a_i, i.e. minus the log
/// canonical threshold of f along g.
inline Rational root_upper_bound_m0(const ResolutionData& res) {
    if (!res.has_positive_a())
        throw PreconditionViolated("no record with a > 0; f is invertible");
    std::optional<Rational> inner;
    for (const auto& d : res.divisors) {
        if (d.a == 0) continue;
        Rational q(Int(d.k) + 1 + d.b, Int(d.a));
        if (!inner || q < *inner) inner = q;
    }
    return -*inner;
}

struct CandidateRoots {
    std::set<Rational> roots;
    /// Negative integers are also admissible roots when set.
    bool integer_escape = false;
};

/// Candidate roots m - (k_i + 1 + l)/a_i for the untwisted g = 1 family.
/// When exceptional_only is requested the table must carry both hypothesis
/// flags (reduced divisor, smooth strict transform).
inline CandidateRoots candidate_roots_g1(const ResolutionData& res, unsigned m,
                                         unsigned ell_max, bool exceptional_only) {
    if (exceptional_only && !(res.reduced && res.strict_transform_smooth))
        throw HypothesisViolated(
            "exceptional-only candidates need a reduced divisor with smooth strict transform");
    CandidateRoots out;
    out.integer_escape = true;
    for (const auto& d : res.divisors) {
        if (d.a == 0) continue;
        if (exceptional_only && !d.exceptional) continue;
        for (unsigned l = 0; l <= ell_max; ++l)
            out.roots.insert(Rational(m) - Rational(Int(d.k) + 1 + l, Int(d.a)));
    }
    return out;
}

/// Exact membership in the g = 1 candidate family, solving for l.
inline bool candidate_roots_g1_contains(const ResolutionData& res, unsigned m,
                                        bool exceptional_only, const Rational& root) {
    if (exceptional_only && !(res.reduced && res.strict_transform_smooth))
        throw HypothesisViolated(
            "exceptional-only candidates need a reduced divisor with smooth strict transform");
    for (const auto& d : res.divisors) {
        if (d.a == 0) continue;
        if (exceptional_only && !d.exceptional) continue;
        Rational l = (Rational(m) - root) * Rational(d.a) - Rational(Int(d.k) + 1);
        if (l >= 0 && is_integer(l)) return true;
    }
    return false;
}

/// Candidate roots m - (k_i + 1 + b_i + l)/a_i for general monomial-like g.
/// The caller asserts that g restricted off the zero locus of f is compatible
/// with the resolution; the table cannot check it. For m = 0 the integer
/// escape is off: every root must be of the stated form.
inline CandidateRoots candidate_roots_twisted(const ResolutionData& res, unsigned m,
                                              unsigned ell_max) {
    CandidateRoots out;
    out.integer_escape = (m != 0);
    for (const auto& d : res.divisors) {
        if (d.a == 0) continue;
        for (unsigned l = 0; l <= ell_max; ++l)
            out.roots.insert(Rational(m) - Rational(Int(d.k) + 1 + d.b + l, Int(d.a)));
    }
    return out;
}

inline bool candidate_roots_twisted_contains(const ResolutionData& res, unsigned m,
                                             const Rational& root) {
    for (const auto& d : res.divisors) {
        if (d.a == 0) continue;
        Rational l = (Rational(m) - root) * Rational(d.a) - Rational(Int(d.k) + 1 + d.b);
        if (l >= 0 && is_integer(l)) return true;
    }
    return false;
}

/// Lower bound min (k_i + 1)/a_i over exceptional records for the minimal
/// exponent. Requires the reduced/smooth-strict-transform hypotheses; returns
/// nullopt (an unbounded minimum) when no exceptional record has a > 0.
inline std::optional<Rational> min_exponent_lower_bound(const ResolutionData& res) {
    if (!(res.reduced && res.strict_transform_smooth))
        throw HypothesisViolated(
            "minimal-exponent bound needs a reduced divisor with smooth strict transform");
    std::optional<Rational> best;
    for (const auto& d : res.divisors) {
        if (!d.exceptional || d.a == 0) continue;
        Rational q(Int(d.k) + 1, Int(d.a));
        if (!best || q < *best) best = q;
    }
    return best;
}

} // namespace bfun
