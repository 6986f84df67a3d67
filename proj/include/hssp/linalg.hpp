#pragma once

// Dense Gaussian elimination over F_q: rank, kernel vectors, linear solves.

#include <optional>
#include <vector>

#include "hssp/field.hpp"

namespace hssp {

class MatrixFq {
public:
    MatrixFq(FieldPtr f, int rows, int cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    int at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    void append_row(const std::vector<int>& row) {
        if (static_cast<int>(row.size()) != cols_) throw ArityMismatchError("row length mismatch");
        e_.insert(e_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::vector<int> apply(const std::vector<int>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw ArityMismatchError("dimension mismatch");
        const Field& F = *field_;
        std::vector<int> y(rows_, 0);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                y[r] = F.add(y[r], F.mul(at(r, c), x[c]));
        return y;
    }

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<int> e_;
};

namespace detail {

// Row-reduce [M | rhs] in place; returns pivot column per row-echelon row.
struct Echelon {
    MatrixFq m;
    std::vector<std::vector<int>> rhs;  // optional augmented columns, one vector per rhs
    std::vector<int> pivot_col;         // for each eliminated row
};

inline Echelon echelonize(MatrixFq m, std::vector<std::vector<int>> rhs) {
    const Field& F = *m.field();
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (m.at(r, col) != 0) { pr = r; break; }
        if (pr == -1) continue;
        if (pr != row) {
            for (int c = 0; c < cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
            for (auto& v : rhs) std::swap(v[pr], v[row]);
        }
        int piv_inv = F.inv(m.at(row, col));
        for (int c = col; c < cols; ++c) m.at(row, c) = F.mul(m.at(row, c), piv_inv);
        for (auto& v : rhs) v[row] = F.mul(v[row], piv_inv);
        for (int r = 0; r < rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            int factor = m.at(r, col);
            for (int c = col; c < cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(row, c)));
            for (auto& v : rhs) v[r] = F.sub(v[r], F.mul(factor, v[row]));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(rhs), std::move(pivots)};
}

}  // namespace detail

inline int mat_rank(const MatrixFq& m) {
    return static_cast<int>(detail::echelonize(m, {}).pivot_col.size());
}

// A nonzero kernel vector, or nullopt when the matrix has full column rank.
inline std::optional<std::vector<int>> mat_kernel_vector(const MatrixFq& m) {
    auto ech = detail::echelonize(m, {});
    const Field& F = *m.field();
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col == -1) return std::nullopt;
    std::vector<int> v(cols, 0);
    v[free_col] = F.one();
    for (size_t r = 0; r < ech.pivot_col.size(); ++r)
        v[ech.pivot_col[r]] = F.neg(ech.m.at(static_cast<int>(r), free_col));
    return v;
}

// Basis of the kernel, one vector per free column.
inline std::vector<std::vector<int>> mat_kernel_basis(const MatrixFq& m) {
    auto ech = detail::echelonize(m, {});
    const Field& F = *m.field();
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<int>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> v(cols, 0);
        v[fc] = F.one();
        for (size_t r = 0; r < ech.pivot_col.size(); ++r)
            v[ech.pivot_col[r]] = F.neg(ech.m.at(static_cast<int>(r), fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve M x = y.  Works for rectangular consistent systems; the solution is
// unique when M has full column rank.  Throws on inconsistency.
inline std::vector<int> mat_solve(const MatrixFq& m, const std::vector<int>& y) {
    if (static_cast<int>(y.size()) != m.rows()) throw ArityMismatchError("rhs dimension mismatch");
    auto ech = detail::echelonize(m, {y});
    const Field& F = *m.field();
    int rank = static_cast<int>(ech.pivot_col.size());
    for (int r = rank; r < m.rows(); ++r)
        if (ech.rhs[0][r] != 0) throw InconsistentSystemError("no solution");
    if (rank < m.cols()) throw SingularMatrixError("solution not unique");
    std::vector<int> x(m.cols(), F.zero());
    for (int r = 0; r < rank; ++r) x[ech.pivot_col[r]] = ech.rhs[0][r];
    return x;
}

}  // namespace hssp
