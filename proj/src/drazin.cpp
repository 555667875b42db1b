#include "gdrazin/drazin.hpp"

#include "gdrazin/errors.hpp"

namespace gdrazin {

std::size_t index(const Matrix& a) {
    detail::require_square(a, "index");
    const std::size_t n = a.rows();
    std::size_t prev_rank = n;  // rank(A^0)
    Matrix power = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        power = power * a;
        const std::size_t r = rank(power);
        if (r == prev_rank) return k;
        prev_rank = r;
    }
    // Rank sequences of n x n matrices stabilise after at most n steps.
    throw OracleIntegrityError("index: rank sequence did not stabilise");
}

bool is_nilpotent(const Matrix& a) {
    detail::require_square(a, "is_nilpotent");
    if (a.rows() == 0) return true;
    return mat_pow(a, static_cast<unsigned>(a.rows())).is_zero();
}

DrazinTriple drazin(const Matrix& a) {
    detail::require_square(a, "drazin");
    const std::size_t n = a.rows();
    DrazinTriple out;
    out.index = index(a);
    if (n == 0) {
        return out;
    }

    const std::size_t k = out.index == 0 ? 1 : out.index;
    const Matrix ak = mat_pow(a, static_cast<unsigned>(k));
    const Matrix range = column_space_basis(ak);
    const Matrix kernel = null_space_basis(ak);
    const std::size_t r = range.cols();
    if (r + kernel.cols() != n) {
        throw OracleIntegrityError("drazin: range and null space of A^k do not span");
    }

    const Matrix p = hstack({range, kernel});
    const Matrix p_inv = inverse(p);
    const Matrix similar = p_inv * a * p;

    // Both subspaces are A-invariant, so the off-diagonal blocks must vanish.
    if (!similar.slice(0, r, r, n - r).is_zero() || !similar.slice(r, 0, n - r, r).is_zero()) {
        throw OracleIntegrityError("drazin: core-nilpotent split is not block diagonal");
    }
    if (!is_nilpotent(similar.slice(r, r, n - r, n - r))) {
        throw OracleIntegrityError("drazin: nilpotent block is not nilpotent");
    }

    const Matrix core_inv = inverse(similar.slice(0, 0, r, r));
    out.inverse = range * core_inv * p_inv.slice(0, 0, r, n);
    out.idempotent = Matrix::identity(n) - a * out.inverse;

    verify_axioms(a, out.inverse).require_integrity("drazin");
    return out;
}

Matrix drazin_inverse(const Matrix& a) {
    return drazin(a).inverse;
}

Matrix spectral_idempotent(const Matrix& a) {
    return drazin(a).idempotent;
}

ConditionReport verify_axioms(const Matrix& a, const Matrix& x) {
    detail::require_square(a, "verify_axioms");
    detail::require_same_shape(a, x, "verify_axioms");
    ConditionReport report;
    report.case_id = "drazin-axioms";
    const Matrix ax = a * x;
    report.add("XAX=X", x * ax - x);
    report.add("AX=XA", ax - x * a);
    const Matrix residual_part = a - a * ax;
    const bool nil = is_nilpotent(residual_part);
    report.add_fact("A-A^2X nilpotent", nil, residual_part);
    return report;
}

}  // namespace gdrazin
