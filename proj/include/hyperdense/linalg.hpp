#ifndef HYPERDENSE_LINALG_HPP
#define HYPERDENSE_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperdense/rational.hpp"

namespace hyperdense {

/// Dense matrix over an exact field. The element type needs +, -, *, /,
/// entry_is_zero(e) (ADL), and copy semantics.
template <class F>
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<F> data;

    Matrix() = default;
    Matrix(size_t r, size_t c, const F& fill) : rows(r), cols(c), data(r * c, fill) {}

    F& at(size_t r, size_t c) { return data[r * cols + c]; }
    const F& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

/// Row echelon form in place. Returns pivot columns.
template <class F>
std::vector<size_t> reduce_to_rref(Matrix<F>& m) {
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && entry_is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        F inv_lead = m.at(rank, col);
        for (size_t j = col; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) / inv_lead;
        for (size_t r = 0; r < m.rows; ++r) {
            if (r == rank || entry_is_zero(m.at(r, col))) continue;
            F factor = m.at(r, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

template <class F>
size_t matrix_rank(Matrix<F> m) {
    return reduce_to_rref(m).size();
}

/// Basis of the right nullspace {v : M v = 0}. Free variables are set to one
/// in ascending column order, so the result is deterministic.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, const F& zero, const F& one) {
    std::vector<size_t> pivots = reduce_to_rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(m.cols, zero);
        v[free_col] = one;
        for (size_t r = 0; r < pivots.size(); ++r) {
            // pivot row r has 1 at pivots[r]; solve for it
            v[pivots[r]] = zero - m.at(r, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve M x = b; returns nullopt when inconsistent. When the system is
/// underdetermined the free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve(Matrix<F> m, std::vector<F> b, const F& zero) {
    if (b.size() != m.rows) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<F> aug(m.rows, m.cols + 1, zero);
    for (size_t r = 0; r < m.rows; ++r) {
        for (size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<size_t> pivots = reduce_to_rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // 0 = 1 row
    std::vector<F> x(m.cols, zero);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
    return x;
}

}  // namespace hyperdense

#endif
