#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfun/rational.hpp"

namespace bfun {

using Exponents = std::vector<unsigned>;

/// Graded-lexicographic order, descending, so map iteration yields the leading
/// term first. This is the canonical term order used for serialization.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b; // lexicographic tie-break
    }
};

/// Dense-map multivariate polynomial with exact rational coefficients.
/// Invariant: no stored zero coefficients; equal polynomials have equal maps.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    explicit MPoly(unsigned nvars = 0) : nvars_(nvars) {}

    static MPoly constant(unsigned nvars, const Rational& c) {
        MPoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static MPoly monomial(unsigned nvars, const Exponents& e, const Rational& c) {
        MPoly p(nvars);
        if (e.size() != nvars) throw VariableMismatch("monomial exponent arity mismatch");
        p.add_term(e, c);
        return p;
    }

    static MPoly variable(unsigned nvars, unsigned index) {
        Exponents e(nvars, 0);
        e.at(index) = 1;
        return monomial(nvars, e, Rational(1));
    }

    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (unsigned e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw PreconditionViolated("constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    /// Total degree; 0 for the zero polynomial.
    unsigned total_degree() const {
        if (terms_.empty()) return 0;
        unsigned d = 0;
        for (unsigned e : terms_.begin()->first) d += e; // leading term has max degree
        return d;
    }

    unsigned degree_in(unsigned var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
        return d;
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        if (e.size() != nvars_) throw VariableMismatch("term exponent arity mismatch");
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_same(b);
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (unsigned i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator*(const Rational& c, const MPoly& p) {
        MPoly r(p.nvars_);
        if (c == 0) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
        return r;
    }
    friend MPoly operator*(const MPoly& p, const Rational& c) { return c * p; }

    MPoly pow(unsigned k) const {
        MPoly r = constant(nvars_, Rational(1));
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    MPoly derivative(unsigned var) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e.at(var) == 0) continue;
            Exponents d = e;
            --d[var];
            r.add_term(d, c * Rational(e[var]));
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != nvars_) throw VariableMismatch("evaluation point arity mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (unsigned i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// View this polynomial in more variables; new variables go at the end.
    MPoly lifted(unsigned new_nvars) const {
        if (new_nvars < nvars_) throw VariableMismatch("lifted would drop variables");
        MPoly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Exponents le = e;
            le.resize(new_nvars, 0);
            r.terms_.emplace(std::move(le), c);
        }
        return r;
    }

    const std::pair<const Exponents, Rational>& leading_term() const {
        if (terms_.empty()) throw PreconditionViolated("leading term of the zero polynomial");
        return *terms_.begin();
    }

private:
    void check_same(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw VariableMismatch("operand variable counts differ");
    }

    unsigned nvars_;
    TermMap terms_;
};

/// Exact quotient p / q, or nullopt when q does not divide p.
inline std::optional<MPoly> try_divide_exact(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) throw PreconditionViolated("division by the zero polynomial");
    MPoly rem = p, quot(p.nvars());
    const auto& [qe, qc] = q.leading_term();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        Exponents diff(re.size());
        for (unsigned i = 0; i < re.size(); ++i) {
            if (re[i] < qe[i]) return std::nullopt;
            diff[i] = re[i] - qe[i];
        }
        MPoly t = MPoly::monomial(p.nvars(), diff, rc / qc);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

inline bool divides(const MPoly& q, const MPoly& p) {
    return try_divide_exact(p, q).has_value();
}

namespace detail {

/// Coefficients of p viewed as univariate in `var`; coefficient polynomials
/// keep the full variable count with exponent 0 in `var`.
inline std::map<unsigned, MPoly> decompose(const MPoly& p, unsigned var) {
    std::map<unsigned, MPoly> out;
    for (const auto& [e, c] : p.terms()) {
        Exponents stripped = e;
        unsigned d = stripped[var];
        stripped[var] = 0;
        auto [it, ok] = out.emplace(d, MPoly(p.nvars()));
        it->second.add_term(stripped, c);
    }
    return out;
}

inline MPoly times_var_power(const MPoly& p, unsigned var, unsigned k) {
    MPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents e2 = e;
        e2[var] += k;
        r.add_term(e2, c);
    }
    return r;
}

} // namespace detail

/// Monic-normalize: divide by the leading grlex coefficient.
inline MPoly normalized(const MPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_term().second);
}

MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

namespace detail {

inline MPoly content_in(const MPoly& p, unsigned var) {
    MPoly g(p.nvars());
    for (const auto& [d, c] : decompose(p, var)) g = mpoly_gcd(g, c);
    return g;
}

/// Pseudo-remainder of a by b in `var` (premultiplies by powers of lc(b)).
inline MPoly pseudo_rem(MPoly a, const MPoly& b, unsigned var) {
    const unsigned db = b.degree_in(var);
    auto bparts = decompose(b, var);
    const MPoly& lb = bparts.rbegin()->second;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        auto aparts = decompose(a, var);
        const unsigned da = aparts.rbegin()->first;
        const MPoly& la = aparts.rbegin()->second;
        a = lb * a - times_var_power(la * b, var, da - db);
        if (!a.is_zero() && a.degree_in(var) == da)
            throw Error("pseudo-division failed to reduce degree");
    }
    return a;
}

} // namespace detail

/// GCD over Q[x_1..x_n] via a primitive pseudo-remainder sequence, normalized
/// so the leading grlex coefficient is 1. gcd(0,0) = 0.
inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a.is_constant() || b.is_constant()) return MPoly::constant(a.nvars(), Rational(1));

    // main variable: highest index occurring in either operand
    unsigned var = 0;
    bool found = false;
    for (unsigned v = a.nvars(); v-- > 0;) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
            var = v;
            found = true;
            break;
        }
    }
    if (!found) return MPoly::constant(a.nvars(), Rational(1));

    MPoly ca = detail::content_in(a, var), cb = detail::content_in(b, var);
    MPoly r0 = *try_divide_exact(a, ca);
    MPoly r1 = *try_divide_exact(b, cb);
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        MPoly r = detail::pseudo_rem(r0, r1, var);
        r0 = std::move(r1);
        if (r.is_zero()) {
            r1 = MPoly(a.nvars());
        } else {
            r1 = *try_divide_exact(r, detail::content_in(r, var));
        }
    }
    MPoly prim = *try_divide_exact(r0, detail::content_in(r0, var));
    return normalized(mpoly_gcd(ca, cb) * prim);
}

/// Square-free test over Q (characteristic zero): p is square-free iff
/// gcd(p, dp/dx_1, ..., dp/dx_n) is constant.
inline bool is_squarefree(const MPoly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    MPoly g = p;
    for (unsigned v = 0; v < p.nvars(); ++v) {
        g = mpoly_gcd(g, p.derivative(v));
        if (g.is_constant()) return true;
    }
    return g.is_constant();
}

/// Canonical serialized form: [coefficient-string, [e1..en]] pairs in
/// descending graded-lexicographic order.
inline std::vector<std::pair<std::string, Exponents>> mpoly_to_terms(const MPoly& p) {
    std::vector<std::pair<std::string, Exponents>> out;
    out.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) out.emplace_back(rat_to_string(c), e);
    return out;
}

inline MPoly mpoly_from_terms(unsigned nvars,
                              const std::vector<std::pair<std::string, Exponents>>& terms) {
    MPoly p(nvars);
    for (const auto& [cs, e] : terms) p.add_term(e, parse_rational(cs));
    return p;
}

/// Default variable names: x,y,z for up to three variables, else x1..xn.
inline std::vector<std::string> default_var_names(unsigned nvars) {
    std::vector<std::string> names;
    if (nvars <= 3) {
        const char* xyz[] = {"x", "y", "z"};
        for (unsigned i = 0; i < nvars; ++i) names.push_back(xyz[i]);
    } else {
        for (unsigned i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

inline std::string mpoly_to_string(const MPoly& p,
                                   const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string vars;
        for (unsigned i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names.at(i);
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += rat_to_string(mag);
        } else {
            if (mag != 1) out += rat_to_string(mag) + "*";
            out += vars;
        }
    }
    return out;
}

inline std::string mpoly_to_string(const MPoly& p) {
    return mpoly_to_string(p, default_var_names(p.nvars()));
}

} // namespace bfun
