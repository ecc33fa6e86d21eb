#pragma once

#include <optional>
#include <vector>

#include "bfun/rational.hpp"

namespace bfun {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Affine solution space of A x = rhs: one particular solution (free
/// variables set to zero) plus a kernel basis. The kernel vector for free
/// column c carries -1 at position c and the reduced-row coefficients at the
/// pivot positions, so bases are reproducible across runs and platforms.
struct LinearSolution {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> kernel;
};

/// Exact Gauss-Jordan elimination over Q with the fixed pivot rule "first
/// nonzero entry in row-major order". Returns nullopt when inconsistent.
inline std::optional<LinearSolution> solve_linear_exact(RatMatrix a, std::vector<Rational> rhs) {
    const size_t m = a.rows(), n = a.cols();
    if (rhs.size() != m) throw PreconditionViolated("rhs length does not match row count");

    std::vector<size_t> pivot_col_of_row;
    std::vector<bool> is_pivot_col(n, false);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t sel = row;
        while (sel < m && a.at(sel, col) == 0) ++sel;
        if (sel == m) continue;
        if (sel != row) {
            for (size_t j = col; j < n; ++j) std::swap(a.at(row, j), a.at(sel, j));
            std::swap(rhs[row], rhs[sel]);
        }
        const Rational inv = Rational(1) / a.at(row, col);
        for (size_t j = col; j < n; ++j) a.at(row, j) *= inv;
        rhs[row] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            const Rational factor = a.at(r, col);
            for (size_t j = col; j < n; ++j) a.at(r, j) -= factor * a.at(row, j);
            rhs[r] -= factor * rhs[row];
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++row;
    }
    for (size_t r = row; r < m; ++r)
        if (rhs[r] != 0) return std::nullopt;

    LinearSolution sol;
    sol.particular.assign(n, Rational(0));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        sol.particular[pivot_col_of_row[r]] = rhs[r];

    for (size_t c = 0; c < n; ++c) {
        if (is_pivot_col[c]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[c] = Rational(-1);
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = a.at(r, c);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

} // namespace bfun
