#pragma once

#include <cstddef>

#include "gdrazin/matrix.hpp"
#include "gdrazin/report.hpp"

namespace gdrazin {

/// Drazin inverse X = A^d together with the index of A and the spectral
/// idempotent A^pi = I - A X.
struct DrazinTriple {
    Matrix inverse;
    std::size_t index = 0;
    Matrix idempotent;
};

/// Least k >= 0 with rank(A^k) = rank(A^{k+1}). Zero iff A is invertible
/// (and for the 0x0 matrix).
std::size_t index(const Matrix& a);

/// In finite dimension quasinilpotent means nilpotent: A^n = 0 for n = dim A.
bool is_nilpotent(const Matrix& a);

/// Core-nilpotent decomposition. Bases of range(A^k) and null(A^k),
/// k = max(index, 1), form an invertible P with P^-1 A P = diag(Core, Nil);
/// then A^d = P diag(Core^-1, 0) P^-1.
///
/// Every result is checked against the three defining identities before it
/// is returned; a failure raises OracleIntegrityError.
DrazinTriple drazin(const Matrix& a);

/// Shorthand for drazin(a).inverse.
Matrix drazin_inverse(const Matrix& a);

/// Spectral idempotent I - A A^d.
Matrix spectral_idempotent(const Matrix& a);

/// Evaluates X A X = X, A X = X A and nilpotency of A - A^2 X. All three hold
/// exactly when X is the Drazin inverse of A (which is unique).
ConditionReport verify_axioms(const Matrix& a, const Matrix& x);

}  // namespace gdrazin
