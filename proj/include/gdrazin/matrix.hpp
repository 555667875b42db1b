#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "gdrazin/scalar.hpp"

namespace gdrazin {

/// Dense row-major matrix of Gaussian rationals. Zero-sized dimensions are
/// allowed so that degenerate blocks (0x0 cores, empty null spaces) need no
/// special casing downstream.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);

    /// Integer literal helper, mostly for fixtures and tests:
    /// Matrix::from_rows({{1, 0}, {0, 1}}).
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(const std::vector<std::vector<GaussianRational>>& rows, std::size_t cols = 0);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    static Matrix zero(std::size_t n) { return zero(n, n); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const std::vector<GaussianRational>& entries() const noexcept { return data_; }

    bool is_zero() const noexcept;
    Matrix transpose() const;

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix slice(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const GaussianRational& s);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const GaussianRational& s) { return lhs *= s; }
    friend Matrix operator*(const GaussianRational& s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// X^e by repeated squaring; X^0 is the identity.
Matrix mat_pow(const Matrix& x, unsigned e);

/// Multiplies left to right: product({A, B, C}) = A*B*C.
Matrix product(std::initializer_list<Matrix> factors);

Matrix hstack(std::initializer_list<Matrix> parts);
Matrix vstack(std::initializer_list<Matrix> parts);
/// [[tl, tr], [bl, br]] for arbitrary conformable blocks.
Matrix block2x2(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br);
Matrix block_diag(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& x);
/// Throws DimensionError when x is not square, SingularMatrixError when it is
/// square but not invertible.
Matrix inverse(const Matrix& x);
/// Columns are the pivot columns of x, hence lie in its image.
Matrix column_space_basis(const Matrix& x);
Matrix null_space_basis(const Matrix& x);

/// The four blocks of M = [[A, B], [C, D]] with A n x n, B n x m, C m x n,
/// D m x m.
struct BlockSpec {
    Matrix A;
    Matrix B;
    Matrix C;
    Matrix D;

    std::size_t n() const noexcept { return A.rows(); }
    std::size_t m() const noexcept { return D.rows(); }

    /// Throws DimensionError when the blocks are not conformable.
    void validate() const;

    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

Matrix assemble_block(const BlockSpec& s);
/// Inverse of assemble_block: splits a square matrix after its first n
/// rows/columns.
BlockSpec extract_block(const Matrix& m, std::size_t n);

namespace detail {

void require_square(const Matrix& x, const char* what);
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

}  // namespace detail

}  // namespace gdrazin
