#include "gdrazin/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "gdrazin/errors.hpp"

namespace gdrazin {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
    if (den == 0) {
        throw SingularMatrixError("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

mpq_class GaussianRational::norm() const {
    return re_ * re_ + im_ * im_;
}

GaussianRational GaussianRational::reciprocal() const {
    if (is_zero()) {
        throw SingularMatrixError("division by zero scalar");
    }
    if (is_real()) {
        return GaussianRational(1 / re_);
    }
    const mpq_class n = norm();
    return GaussianRational(re_ / n, -im_ / n);
}

std::size_t GaussianRational::bit_size() const noexcept {
    auto bits = [](const mpq_class& q) {
        return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
    };
    return bits(re_) + bits(im_);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    if (!rhs.is_real()) im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    if (!rhs.is_real()) im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    if (is_real() && rhs.is_real()) {
        re_ *= rhs.re_;
        return *this;
    }
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) {
        throw SingularMatrixError("division by zero scalar");
    }
    if (rhs.is_real()) {
        re_ /= rhs.re_;
        if (!is_real()) im_ /= rhs.re_;
        return *this;
    }
    return *this *= rhs.reciprocal();
}

namespace {

std::string frac_text(const mpq_class& q) {
    // mpq_class::get_str prints "n" or "n/d" for canonical values.
    return q.get_str();
}

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    GaussianRational run() {
        trim();
        if (text_.empty()) fail("empty scalar");

        // Leading term: either a real fraction or an imaginary term.
        mpq_class first;
        bool first_is_imag = false;
        parse_term(first, first_is_imag);
        if (at_end()) {
            return first_is_imag ? GaussianRational(0, first) : GaussianRational(first);
        }
        if (first_is_imag) fail("imaginary part must follow the real part");

        const char sign = text_[pos_];
        if (sign != '+' && sign != '-') fail("expected '+' or '-' before imaginary part");
        ++pos_;
        mpq_class second;
        bool second_is_imag = false;
        parse_term(second, second_is_imag);
        if (!second_is_imag) fail("second term must be imaginary");
        if (!at_end()) fail("trailing characters");
        if (sign == '-') second = -second;
        return GaussianRational(first, second);
    }

private:
    void trim() {
        while (!text_.empty() && std::isspace(static_cast<unsigned char>(text_.front()))) text_.remove_prefix(1);
        while (!text_.empty() && std::isspace(static_cast<unsigned char>(text_.back()))) text_.remove_suffix(1);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("invalid scalar \"" + std::string(text_) + "\": " + why);
    }

    mpz_class digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    // term := "-"? (digits ("/" digits)? "i"? | "i")
    void parse_term(mpq_class& out, bool& is_imag) {
        bool negative = false;
        if (!at_end() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        if (!at_end() && text_[pos_] == 'i') {
            ++pos_;
            out = negative ? -1 : 1;
            is_imag = true;
            return;
        }
        mpz_class num = digits();
        mpz_class den = 1;
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            den = digits();
            if (den == 0) fail("zero denominator");
        }
        out = mpq_class(num, den);
        out.canonicalize();
        if (negative) out = -out;
        is_imag = false;
        if (!at_end() && text_[pos_] == 'i') {
            ++pos_;
            is_imag = true;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string GaussianRational::to_string() const {
    if (is_real()) return frac_text(re_);
    std::string imag;
    const mpq_class abs_im = abs(im_);
    imag = (abs_im == 1) ? "i" : frac_text(abs_im) + "i";
    if (sgn(re_) == 0) {
        // "-i" is outside the grammar; a lone negative unit is written "-1i".
        if (sgn(im_) < 0) return abs_im == 1 ? "-1i" : "-" + imag;
        return imag;
    }
    return frac_text(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    return ScalarParser(text).run();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

}  // namespace gdrazin
