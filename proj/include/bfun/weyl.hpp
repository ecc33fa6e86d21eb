#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bfun/bfunction.hpp"
#include "bfun/linalg.hpp"
#include "bfun/mpoly.hpp"

namespace bfun {

/// Multi-indices of total degree <= max_total, graded-lex ascending.
inline std::vector<Exponents> exponents_up_to(unsigned nvars, unsigned max_total) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    auto fixed_total = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = remaining;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
            cur[pos] = 0;
        }
    };
    for (unsigned total = 0; total <= max_total; ++total) {
        if (nvars == 0) {
            if (total == 0) out.push_back(cur);
            continue;
        }
        fixed_total(fixed_total, 0, total);
    }
    return out;
}

/// Term key of an operator: derivative multi-exponent and power of s.
struct WTermKey {
    Exponents beta;
    unsigned spow = 0;

    bool operator<(const WTermKey& o) const {
        unsigned da = 0, db = 0;
        for (unsigned e : beta) da += e;
        for (unsigned e : o.beta) db += e;
        if (da != db) return da < db;
        if (beta != o.beta) return beta < o.beta;
        return spow < o.spow;
    }
    bool operator==(const WTermKey& o) const { return beta == o.beta && spow == o.spow; }
};

/// Element of the Weyl algebra extended by the commuting variable s:
/// a finite sum of (coefficient polynomial in x) * partial^beta * s^j.
class WeylOperator {
public:
    using TermMap = std::map<WTermKey, MPoly>;

    explicit WeylOperator(unsigned nvars = 0) : nvars_(nvars) {}

    static WeylOperator identity(unsigned nvars) {
        WeylOperator p(nvars);
        p.add_term(Exponents(nvars, 0), 0, MPoly::constant(nvars, Rational(1)));
        return p;
    }

    static WeylOperator partial(unsigned nvars, unsigned var) {
        Exponents beta(nvars, 0);
        beta.at(var) = 1;
        WeylOperator p(nvars);
        p.add_term(beta, 0, MPoly::constant(nvars, Rational(1)));
        return p;
    }

    static WeylOperator multiplication(const MPoly& c) {
        WeylOperator p(c.nvars());
        p.add_term(Exponents(c.nvars(), 0), 0, c);
        return p;
    }

    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& beta, unsigned spow, const MPoly& coeff) {
        if (coeff.is_zero()) return;
        if (beta.size() != nvars_ || coeff.nvars() != nvars_)
            throw VariableMismatch("operator term arity mismatch");
        WTermKey key{beta, spow};
        auto [it, inserted] = terms_.emplace(std::move(key), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    unsigned order() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) {
            unsigned t = 0;
            for (unsigned e : k.beta) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    unsigned s_degree() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.spow);
        return d;
    }

    unsigned coeff_degree() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, c.total_degree());
        return d;
    }

    WeylOperator& operator+=(const WeylOperator& o) {
        if (nvars_ != o.nvars_) throw VariableMismatch("operator variable counts differ");
        for (const auto& [k, c] : o.terms_) add_term(k.beta, k.spow, c);
        return *this;
    }
    friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
    friend WeylOperator operator-(const WeylOperator& a, const WeylOperator& b) {
        return a + Rational(-1) * b;
    }

    friend WeylOperator operator*(const Rational& c, const WeylOperator& p) {
        WeylOperator r(p.nvars_);
        for (const auto& [k, coeff] : p.terms_) r.add_term(k.beta, k.spow, c * coeff);
        return r;
    }

    /// Composition: this applied after other. Derivatives are moved across
    /// coefficients with the Leibniz rule, so [partial_i, x_i] = 1 holds.
    friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
        if (a.nvars_ != b.nvars_) throw VariableMismatch("operator variable counts differ");
        const unsigned n = a.nvars_;
        WeylOperator r(n);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                // partial^beta_a . cb = sum_{gamma <= beta_a} binom(beta_a, gamma)
                //                       (partial^{beta_a - gamma} cb) partial^gamma
                std::vector<Exponents> gammas = exponents_below(ka.beta);
                for (const Exponents& gamma : gammas) {
                    Rational binom(1);
                    MPoly dcb = cb;
                    for (unsigned i = 0; i < n; ++i) {
                        binom *= binomial(ka.beta[i], gamma[i]);
                        for (unsigned t = gamma[i]; t < ka.beta[i]; ++t)
                            dcb = dcb.derivative(i);
                    }
                    if (dcb.is_zero()) continue;
                    Exponents beta = gamma;
                    for (unsigned i = 0; i < n; ++i) beta[i] += kb.beta[i];
                    r.add_term(beta, ka.spow + kb.spow, (binom * ca) * dcb);
                }
            }
        }
        return r;
    }

    bool operator==(const WeylOperator& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const WeylOperator& o) const { return !(*this == o); }

private:
    static Rational binomial(unsigned n, unsigned k) {
        Rational r(1);
        for (unsigned i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
        return r;
    }

    static std::vector<Exponents> exponents_below(const Exponents& beta) {
        std::vector<Exponents> out;
        Exponents cur(beta.size(), 0);
        auto rec = [&](auto&& self, size_t pos) -> void {
            if (pos == beta.size()) {
                out.push_back(cur);
                return;
            }
            for (unsigned e = 0; e <= beta[pos]; ++e) {
                cur[pos] = e;
                self(self, pos + 1);
            }
            cur[pos] = 0;
        };
        rec(rec, 0);
        return out;
    }

    unsigned nvars_;
    TermMap terms_;
};

/// Element (numerator / f^d) * f^s of O[1/f, s] f^s. The numerator lives in
/// n+1 variables, the last one being s. Construction strips factors of f
/// from the numerator whenever f divides it exactly.
class FPowerElement {
public:
    FPowerElement(MPoly f, MPoly numerator, unsigned denom_exp)
        : f_(std::move(f)), numerator_(std::move(numerator)), denom_exp_(denom_exp) {
        if (f_.is_zero()) throw ZeroPolynomial("base of f^s is zero");
        if (numerator_.nvars() != f_.nvars() + 1)
            throw VariableMismatch("numerator must have one extra variable for s");
        normalize();
    }

    /// f^s itself.
    static FPowerElement power(const MPoly& f) {
        return FPowerElement(f, MPoly::constant(f.nvars() + 1, Rational(1)), 0);
    }

    /// g * f^s for a polynomial g in x.
    static FPowerElement multiple(const MPoly& f, const MPoly& g) {
        return FPowerElement(f, g.lifted(f.nvars() + 1), 0);
    }

    const MPoly& base() const { return f_; }
    const MPoly& numerator() const { return numerator_; }
    unsigned denom_exp() const { return denom_exp_; }
    unsigned nvars() const { return f_.nvars(); }
    bool is_zero() const { return numerator_.is_zero(); }

    FPowerElement operator+(const FPowerElement& o) const {
        check_compatible(o);
        const unsigned d = std::max(denom_exp_, o.denom_exp_);
        const MPoly lf = f_.lifted(f_.nvars() + 1);
        MPoly num = numerator_ * lf.pow(d - denom_exp_) +
                    o.numerator_ * lf.pow(d - o.denom_exp_);
        return FPowerElement(f_, std::move(num), d);
    }

    FPowerElement scaled(const Rational& c) const {
        return FPowerElement(f_, c * numerator_, denom_exp_);
    }

    /// Multiply by a polynomial in x and s.
    FPowerElement times(const MPoly& p) const {
        return FPowerElement(f_, numerator_ * p, denom_exp_);
    }

    /// Equality after cross-multiplying by powers of f.
    bool operator==(const FPowerElement& o) const {
        if (f_ != o.f_) return false;
        const MPoly lf = f_.lifted(f_.nvars() + 1);
        return numerator_ * lf.pow(o.denom_exp_) == o.numerator_ * lf.pow(denom_exp_);
    }
    bool operator!=(const FPowerElement& o) const { return !(*this == o); }

private:
    void normalize() {
        if (numerator_.is_zero()) {
            denom_exp_ = 0;
            return;
        }
        const MPoly lf = f_.lifted(f_.nvars() + 1);
        while (denom_exp_ > 0) {
            auto q = try_divide_exact(numerator_, lf);
            if (!q) break;
            numerator_ = std::move(*q);
            --denom_exp_;
        }
    }

    void check_compatible(const FPowerElement& o) const {
        if (f_ != o.f_) throw VariableMismatch("elements live over different bases f");
    }

    MPoly f_;
    MPoly numerator_;
    unsigned denom_exp_;
};

/// Exact image of u under P. A derivative acts by
///   partial_i ((h / f^d) f^s) = ((partial_i h) f + (s - d) h partial_i f) / f^{d+1} * f^s
/// and s acts as multiplication by the formal variable s.
inline FPowerElement apply(const WeylOperator& op, const FPowerElement& u) {
    if (op.nvars() != u.nvars())
        throw VariableMismatch("operator and element variable counts differ");
    const unsigned n = u.nvars();
    const MPoly lf = u.base().lifted(n + 1);
    std::vector<MPoly> df;
    for (unsigned i = 0; i < n; ++i) df.push_back(u.base().derivative(i).lifted(n + 1));
    const MPoly svar = MPoly::variable(n + 1, n);

    FPowerElement acc(u.base(), MPoly(n + 1), 0);
    for (const auto& [key, coeff] : op.terms()) {
        MPoly num = detail::times_var_power(u.numerator(), n, key.spow);
        unsigned d = u.denom_exp();
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned rep = 0; rep < key.beta[i]; ++rep) {
                num = num.derivative(i) * lf +
                      num * df[i] * (svar - MPoly::constant(n + 1, Rational(d)));
                ++d;
            }
        }
        acc = acc + FPowerElement(u.base(), num * coeff.lifted(n + 1), d);
    }
    return acc;
}

/// Search bounds for the ansatz oracle.
struct OracleBounds {
    unsigned max_order = 4;
    unsigned max_coeff_degree = 6;
    unsigned max_s_degree = 3;
    unsigned max_b_degree = 8;
};

struct OracleResult {
    BFunction b;
    WeylOperator witness;
    OracleBounds bounds_used;
};

/// Bounds that provably suffice for a monomial f (and monomial g): the full
/// derivative witness has order sum(a), constant coefficients, no s, and the
/// b-function degree equals sum(a).
inline OracleBounds monomial_oracle_bounds(const std::vector<unsigned>& a) {
    unsigned total = 0;
    for (unsigned ai : a) total += ai;
    return OracleBounds{total, 0, 0, total};
}

struct OracleOptions {
    // The linear system splits into independent strata under any weight
    // grading shared by f and g; restricting to the stratum carrying the
    // right-hand side is lossless and much smaller. Disable to exercise the
    // unrestricted solve.
    bool use_grading = true;
};

namespace detail {

/// Integer basis (primitive rows, first nonzero positive) of the lattice of
/// weight vectors w making both f and g weighted-homogeneous.
inline std::vector<std::vector<Int>> joint_gradings(const MPoly& f, const MPoly& g) {
    const unsigned n = f.nvars();
    std::vector<std::vector<long long>> rows;
    for (const MPoly* p : {&f, &g}) {
        const Exponents* first = nullptr;
        for (const auto& [e, c] : p->terms()) {
            if (!first) {
                first = &e;
                continue;
            }
            std::vector<long long> row(n);
            for (unsigned i = 0; i < n; ++i)
                row[i] = static_cast<long long>(e[i]) - static_cast<long long>((*first)[i]);
            rows.push_back(std::move(row));
        }
    }
    RatMatrix a(rows.size(), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (unsigned c = 0; c < n; ++c) a.at(r, c) = Rational(rows[r][c]);
    auto sol = solve_linear_exact(a, std::vector<Rational>(rows.size(), Rational(0)));
    std::vector<std::vector<Int>> basis;
    for (const auto& v : sol->kernel) {
        Int l = 1;
        for (const auto& q : v) l = boost::multiprecision::lcm(l, den(q));
        std::vector<Int> w(n);
        Int gg = 0;
        for (unsigned i = 0; i < n; ++i) {
            w[i] = num(v[i]) * (l / den(v[i]));
            gg = boost::multiprecision::gcd(gg, w[i]);
        }
        if (gg == 0) continue;
        for (auto& x : w) x /= gg;
        for (const auto& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

/// Multi-degree of the x-part of a monomial under the grading rows.
inline std::vector<Int> multidegree(const std::vector<std::vector<Int>>& w, const Exponents& e,
                                    unsigned nx) {
    std::vector<Int> md(w.size(), 0);
    for (size_t r = 0; r < w.size(); ++r)
        for (unsigned i = 0; i < nx; ++i) md[r] += w[r][i] * e[i];
    return md;
}

/// Multi-degree of a polynomial whose x-part must be graded-homogeneous.
inline std::vector<Int> homogeneous_multidegree(const std::vector<std::vector<Int>>& w,
                                                const MPoly& p, unsigned nx) {
    auto md = multidegree(w, p.terms().begin()->first, nx);
    for (const auto& [e, c] : p.terms())
        if (multidegree(w, e, nx) != md)
            throw Error("internal: stratification applied to a non-homogeneous polynomial");
    return md;
}

} // namespace detail

/// Minimal monic b within the given bounds with b(s) g f^s = P (g f f^s),
/// together with the witness P. The relation is solved multiplied through by
/// f^D (D = max operator order) so the system stays polynomial, iterating the
/// degree of b upward; the returned identity is re-verified by substitution.
inline OracleResult solve_bfunction(const MPoly& f, const MPoly& g,
                                    const OracleBounds& bounds = {},
                                    const OracleOptions& options = {}) {
    if (f.nvars() != g.nvars()) throw VariableMismatch("f and g variable counts differ");
    if (f.is_zero()) throw ZeroPolynomial("f is zero");
    if (g.is_zero()) throw ZeroPolynomial("g is zero");
    const unsigned n = f.nvars();

    if (f.is_constant()) {
        // f invertible: b = 1 with the constant witness 1/f.
        OracleResult res{BFunction{},
                         Rational(1) / f.constant_value() * WeylOperator::identity(n),
                         bounds};
        return res;
    }

    const unsigned D = bounds.max_order;
    const MPoly lf = f.lifted(n + 1);
    const MPoly lg = g.lifted(n + 1);
    const MPoly svar = MPoly::variable(n + 1, n);

    std::vector<MPoly> fpow{MPoly::constant(n + 1, Rational(1))};
    for (unsigned k = 1; k <= D; ++k) fpow.push_back(fpow.back() * lf);

    // numerators h_beta with partial^beta (g f f^s) = (h_beta / f^{|beta|}) f^s
    std::vector<MPoly> df;
    for (unsigned i = 0; i < n; ++i) df.push_back(f.derivative(i).lifted(n + 1));
    const std::vector<Exponents> betas = exponents_up_to(n, D);
    std::map<Exponents, MPoly> h;
    for (const Exponents& beta : betas) {
        unsigned total = 0;
        for (unsigned e : beta) total += e;
        if (total == 0) {
            h.emplace(beta, lg * lf);
            continue;
        }
        unsigned i = 0;
        while (beta[i] == 0) ++i;
        Exponents parent = beta;
        --parent[i];
        const MPoly& hp = h.at(parent);
        const unsigned dpar = total - 1;
        h.emplace(beta, hp.derivative(i) * lf +
                            hp * df[i] * (svar - MPoly::constant(n + 1, Rational(dpar))));
    }

    const MPoly lhs_base = lg * fpow[D]; // g f^D, multiplies every power of s in b

    // columns of the ansatz: x^alpha partial^beta s^j with H_beta = h_beta f^{D-|beta|}
    struct Column {
        Exponents beta;
        unsigned spow;
        Exponents alpha;
        const MPoly* image; // H_beta
    };
    std::vector<std::vector<Int>> grading;
    if (options.use_grading) grading = detail::joint_gradings(f, g);

    std::map<Exponents, MPoly> big_h;
    std::vector<Int> lhs_md = detail::homogeneous_multidegree(grading, lhs_base, n);
    const std::vector<Exponents> alphas = exponents_up_to(n, bounds.max_coeff_degree);
    std::vector<Column> columns;
    for (const Exponents& beta : betas) {
        unsigned total = 0;
        for (unsigned e : beta) total += e;
        MPoly hb = h.at(beta) * fpow[D - total];
        if (hb.is_zero()) continue;
        auto [it, ok] = big_h.emplace(beta, std::move(hb));
        const MPoly& image = it->second;
        auto hmd = detail::homogeneous_multidegree(grading, image, n);
        for (const Exponents& alpha : alphas) {
            // stratum restriction: alpha must close the multidegree gap
            auto amd = detail::multidegree(grading, alpha, n);
            bool match = true;
            for (size_t r = 0; r < grading.size(); ++r)
                if (amd[r] + hmd[r] != lhs_md[r]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            for (unsigned j = 0; j <= bounds.max_s_degree; ++j)
                columns.push_back(Column{beta, j, alpha, &image});
        }
    }

    // scatter a polynomial shifted by (alpha, jshift) into per-row entries
    using RowKey = Exponents; // n+1 exponents, s last
    auto shifted_terms = [&](const MPoly& p, const Exponents* alpha, unsigned jshift) {
        std::vector<std::pair<RowKey, Rational>> out;
        out.reserve(p.terms().size());
        for (const auto& [e, c] : p.terms()) {
            RowKey key = e;
            if (alpha)
                for (unsigned i = 0; i < n; ++i) key[i] += (*alpha)[i];
            key[n] += jshift;
            out.emplace_back(std::move(key), c);
        }
        return out;
    };

    // Solves the matching problem for fixed b (rhs_poly = b(s) g f^D expanded),
    // or with b unknown of degree delta when rhs_poly is null.
    auto assemble_and_solve =
        [&](unsigned delta, const UPoly* fixed_b) -> std::optional<LinearSolution> {
        std::map<RowKey, size_t, GrlexGreater> row_of;
        std::vector<std::vector<std::pair<RowKey, Rational>>> col_entries;
        col_entries.reserve(columns.size() + delta);
        for (const auto& col : columns)
            col_entries.push_back(shifted_terms(*col.image, &col.alpha, col.spow));
        if (!fixed_b) {
            for (unsigned k = 0; k < delta; ++k) {
                auto entries = shifted_terms(lhs_base, nullptr, k);
                for (auto& [key, c] : entries) c = -c;
                col_entries.push_back(std::move(entries));
            }
        }
        std::vector<std::pair<RowKey, Rational>> rhs_entries;
        if (fixed_b) {
            for (unsigned k = 0; k < fixed_b->size(); ++k) {
                if ((*fixed_b)[k] == 0) continue;
                for (auto& [key, c] : shifted_terms(lhs_base, nullptr, k))
                    rhs_entries.emplace_back(key, c * (*fixed_b)[k]);
            }
        } else {
            rhs_entries = shifted_terms(lhs_base, nullptr, delta);
        }

        for (const auto& entries : col_entries)
            for (const auto& [key, c] : entries) row_of.emplace(key, 0);
        for (const auto& [key, c] : rhs_entries) row_of.emplace(key, 0);
        size_t idx = 0;
        for (auto& [key, r] : row_of) r = idx++;

        RatMatrix a(row_of.size(), col_entries.size());
        std::vector<Rational> rhs(row_of.size(), Rational(0));
        for (size_t c = 0; c < col_entries.size(); ++c)
            for (const auto& [key, v] : col_entries[c]) a.at(row_of.at(key), c) += v;
        for (const auto& [key, v] : rhs_entries) rhs[row_of.at(key)] += v;
        return solve_linear_exact(std::move(a), std::move(rhs));
    };

    auto build_witness = [&](const std::vector<Rational>& x) {
        WeylOperator p(n);
        for (size_t c = 0; c < columns.size(); ++c) {
            if (x[c] == 0) continue;
            p.add_term(columns[c].beta, columns[c].spow,
                       MPoly::monomial(n, columns[c].alpha, x[c]));
        }
        return p;
    };

    auto verify = [&](const UPoly& bpoly, const WeylOperator& witness) {
        MPoly bs(n + 1);
        for (unsigned k = 0; k < bpoly.size(); ++k)
            bs += detail::times_var_power(MPoly::constant(n + 1, bpoly[k]), n, k);
        FPowerElement lhs(f, lg * bs, 0);                       // b(s) g f^s
        FPowerElement rhs = apply(witness, FPowerElement(f, lg * lf, 0)); // P (g f f^s)
        if (lhs != rhs) throw Error("internal: witness failed substitution check");
    };

    for (unsigned delta = 0; delta <= bounds.max_b_degree; ++delta) {
        auto sol = assemble_and_solve(delta, nullptr);
        if (!sol) continue;

        UPoly bpoly(delta + 1, Rational(0));
        bpoly[delta] = 1;
        for (unsigned k = 0; k < delta; ++k) bpoly[k] = sol->particular[columns.size() + k];

        // If the kernel moves the b-part, several monic b's of this degree are
        // valid; their gcd is still a valid b in the unbounded problem, so try
        // to witness it within bounds before settling for the canonical one.
        UPoly bgcd = bpoly;
        for (const auto& v : sol->kernel) {
            UPoly tail(v.begin() + static_cast<long>(columns.size()), v.end());
            upoly_trim(tail);
            if (!tail.empty()) bgcd = upoly_gcd(bgcd, tail);
        }
        if (upoly_degree(bgcd) < upoly_degree(bpoly)) {
            if (auto con = assemble_and_solve(delta, &bgcd)) {
                WeylOperator witness = build_witness(con->particular);
                verify(bgcd, witness);
                return OracleResult{factor_rational_roots(bgcd), std::move(witness), bounds};
            }
        }
        WeylOperator witness = build_witness(sol->particular);
        verify(bpoly, witness);
        return OracleResult{factor_rational_roots(bpoly), std::move(witness), bounds};
    }
    throw BoundsExhausted("no b-function found within bounds (order " +
                              std::to_string(bounds.max_order) + ", coefficient degree " +
                              std::to_string(bounds.max_coeff_degree) + ", s-degree " +
                              std::to_string(bounds.max_s_degree) + ", b-degree " +
                              std::to_string(bounds.max_b_degree) + ")",
                          bounds.max_order, bounds.max_coeff_degree, bounds.max_s_degree,
                          bounds.max_b_degree);
}

/// b with one multiplicity of the forced root -1 removed.
inline BFunction reduced_bfunction(const BFunction& b) {
    if (!b.has_root(Rational(-1)))
        throw MissingRootMinusOne("-1 is not a root; the reduced b-function is undefined");
    BFunction r;
    for (const auto& [root, mult] : b.roots()) {
        unsigned m = mult;
        if (root == -1) --m;
        r.add_root(root, m);
    }
    return r;
}

} // namespace bfun
