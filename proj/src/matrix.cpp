#include "gdrazin/matrix.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "gdrazin/errors.hpp"

namespace gdrazin {

namespace detail {

void require_square(const Matrix& x, const char* what) {
    if (!x.is_square()) {
        std::ostringstream os;
        os << what << ": expected a square matrix, got " << x.rows() << "x" << x.cols();
        throw DimensionError(os.str());
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream os;
        os << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw DimensionError(os.str());
    }
}

}  // namespace detail

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("entry count does not match rows*cols");
    }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged row in matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = GaussianRational(v);
        ++i;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows, std::size_t cols) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? cols : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged row in matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::slice(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("slice out of range");
    Matrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    detail::require_same_shape(*this, rhs, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (!rhs.data_[k].is_zero()) data_[k] += rhs.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    detail::require_same_shape(*this, rhs, "sub");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (!rhs.data_[k].is_zero()) data_[k] -= rhs.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& s) {
    for (auto& z : data_) {
        if (!z.is_zero()) z *= s;
    }
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& z : r.data_) z = -z;
    return r;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) {
        std::ostringstream os;
        os << "mul: inner dimensions differ (" << lhs.rows_ << "x" << lhs.cols_ << " * " << rhs.rows_ << "x"
           << rhs.cols_ << ")";
        throw DimensionError(os.str());
    }
    Matrix out(lhs.rows_, rhs.cols_);
    GaussianRational term;
    // i-k-j order so zero entries of lhs skip a whole row of work; the
    // operands here are frequently sparse block matrices.
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const GaussianRational& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const GaussianRational& b = rhs(k, j);
                if (b.is_zero()) continue;
                term = a;
                term *= b;
                out(i, j) += term;
            }
        }
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

Matrix mat_pow(const Matrix& x, unsigned e) {
    detail::require_square(x, "mat_pow");
    Matrix result = Matrix::identity(x.rows());
    if (e == 0) return result;
    Matrix base = x;
    bool first = true;
    while (true) {
        if (e & 1U) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1U;
        if (e == 0) break;
        base = base * base;
    }
    return result;
}

Matrix product(std::initializer_list<Matrix> factors) {
    if (factors.size() == 0) throw DimensionError("product of no factors");
    auto it = factors.begin();
    Matrix acc = *it++;
    for (; it != factors.end(); ++it) acc = acc * *it;
    return acc;
}

Matrix hstack(std::initializer_list<Matrix> parts) {
    std::size_t rows = parts.size() ? parts.begin()->rows() : 0;
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows) throw DimensionError("hstack: row counts differ");
        cols += p.cols();
    }
    Matrix out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) out(i, c0 + j) = p(i, j);
        c0 += p.cols();
    }
    return out;
}

Matrix vstack(std::initializer_list<Matrix> parts) {
    std::size_t cols = parts.size() ? parts.begin()->cols() : 0;
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw DimensionError("vstack: column counts differ");
        rows += p.rows();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = p(i, j);
        r0 += p.rows();
    }
    return out;
}

Matrix block2x2(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
    return vstack({hstack({tl, tr}), hstack({bl, br})});
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    return block2x2(a, Matrix::zero(a.rows(), b.cols()), Matrix::zero(b.rows(), a.cols()), b);
}

namespace {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

// Exact Gauss-Jordan. Among the candidate pivots in a column the entry with
// the fewest bits wins; exactness makes the result independent of this
// choice, it only keeps intermediate coefficients small.
Echelon row_reduce(Matrix m, bool full) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        std::size_t best_bits = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = row; r < m.rows(); ++r) {
            const auto& z = m(r, col);
            if (z.is_zero()) continue;
            const std::size_t bits = z.bit_size();
            if (bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == m.rows()) continue;
        if (best != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
        }
        const GaussianRational inv = m(row, col).reciprocal();
        for (std::size_t j = col; j < m.cols(); ++j) {
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        }
        const std::size_t first = full ? 0 : row + 1;
        for (std::size_t r = first; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const GaussianRational factor = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (m(row, j).is_zero()) continue;
                m(r, j) -= factor * m(row, j);
            }
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

}  // namespace

std::size_t rank(const Matrix& x) {
    return row_reduce(x, false).pivot_cols.size();
}

Matrix inverse(const Matrix& x) {
    detail::require_square(x, "inverse");
    const std::size_t n = x.rows();
    const Echelon e = row_reduce(hstack({x, Matrix::identity(n)}), true);
    if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) {
        throw SingularMatrixError("inverse: matrix is singular");
    }
    return e.reduced.slice(0, n, n, n);
}

Matrix column_space_basis(const Matrix& x) {
    const Echelon e = row_reduce(x, false);
    Matrix basis(x.rows(), e.pivot_cols.size());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
        for (std::size_t i = 0; i < x.rows(); ++i) basis(i, k) = x(i, e.pivot_cols[k]);
    return basis;
}

Matrix null_space_basis(const Matrix& x) {
    const Echelon e = row_reduce(x, true);
    std::vector<bool> is_pivot(x.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < x.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(x.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = GaussianRational(1);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
            basis(e.pivot_cols[r], k) = -e.reduced(r, f);
        }
    }
    return basis;
}

void BlockSpec::validate() const {
    const std::size_t n = A.rows();
    const std::size_t m = D.rows();
    if (!A.is_square() || !D.is_square()) throw DimensionError("BlockSpec: A and D must be square");
    if (B.rows() != n || B.cols() != m) throw DimensionError("BlockSpec: B must be n x m");
    if (C.rows() != m || C.cols() != n) throw DimensionError("BlockSpec: C must be m x n");
}

Matrix assemble_block(const BlockSpec& s) {
    s.validate();
    return block2x2(s.A, s.B, s.C, s.D);
}

BlockSpec extract_block(const Matrix& m, std::size_t n) {
    detail::require_square(m, "extract_block");
    if (n > m.rows()) throw DimensionError("extract_block: split index exceeds dimension");
    const std::size_t k = m.rows() - n;
    return BlockSpec{m.slice(0, 0, n, n), m.slice(0, n, n, k), m.slice(n, 0, k, n), m.slice(n, n, k, k)};
}

}  // namespace gdrazin
