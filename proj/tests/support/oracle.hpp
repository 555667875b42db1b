#pragma once

// Test-only Drazin inverse that shares no code with the core-nilpotent
// decomposition: A^d = A^k W^- A^k with W = A^(2k+1), k >= index(A), and W^-
// any inner inverse ({1}-inverse) of W. k = dim A always suffices.

#include <random>
#include <utility>
#include <vector>

#include "gdrazin/matrix.hpp"

namespace gdrazin::testing {

/// Inner inverse G of W (W G W = W) from a plain Gauss-Jordan reduction
/// P W = R: G = E P where E selects the pivot columns of R.
inline Matrix inner_inverse(const Matrix& w) {
    const std::size_t rows = w.rows();
    const std::size_t cols = w.cols();
    Matrix r = w;
    Matrix p = Matrix::identity(rows);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && r(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(r(piv, j), r(row, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(p(piv, j), p(row, j));
        const GaussianRational inv = GaussianRational(1) / r(row, col);
        for (std::size_t j = 0; j < cols; ++j) r(row, j) *= inv;
        for (std::size_t j = 0; j < rows; ++j) p(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || r(i, col).is_zero()) continue;
            const GaussianRational f = r(i, col);
            for (std::size_t j = 0; j < cols; ++j) r(i, j) -= f * r(row, j);
            for (std::size_t j = 0; j < rows; ++j) p(i, j) -= f * p(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix e(cols, rows);
    for (std::size_t i = 0; i < pivots.size(); ++i) e(pivots[i], i) = GaussianRational(1);
    return e * p;
}

inline Matrix independent_drazin(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return a;
    Matrix ak = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) ak = ak * a;
    Matrix w = ak;
    for (std::size_t i = 0; i < n + 1; ++i) w = w * a;  // A^(2n+1)
    return ak * inner_inverse(w) * ak;
}

inline Matrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi,
                                double density = 1.0) {
    std::uniform_int_distribution<long> val(lo, hi);
    std::bernoulli_distribution keep(density);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng)) m(i, j) = GaussianRational(val(rng));
    return m;
}

}  // namespace gdrazin::testing
