#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gdrazin {

/// Exact complex scalar re + im*i with both parts arbitrary-precision
/// rationals. GMP keeps every mpq_class canonical (positive denominator,
/// lowest terms) after each arithmetic operation.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational fraction(long num, long den);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2
    mpq_class norm() const;
    /// Throws SingularMatrixError on zero.
    GaussianRational reciprocal() const;

    /// Rough cost of the scalar: total bit length of numerators and
    /// denominators. Used for pivot selection.
    std::size_t bit_size() const noexcept;

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical text form accepted by parse(): "3", "-1/2", "2i", "i",
    /// "1/2-3/4i".
    std::string to_string() const;

    /// Parses the scalar grammar
    ///   scalar := real | imag | real sign imag
    ///   real   := frac
    ///   imag   := frac "i" | "i"
    ///   frac   := "-"? digits ("/" digits)?
    /// Zero denominators are rejected; non-canonical fractions are reduced.
    static GaussianRational parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace gdrazin
