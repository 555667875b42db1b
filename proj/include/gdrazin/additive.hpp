#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdrazin/matrix.hpp"
#include "gdrazin/report.hpp"

namespace gdrazin {

/// Named intermediate matrices of a constructive derivation, in the order
/// they were produced, plus the identities checked along the way.
struct DerivationTrace {
    std::vector<std::pair<std::string, Matrix>> matrices;
    ConditionReport obligations;

    void put(std::string name, Matrix value);
    bool has(std::string_view name) const noexcept;
    /// Throws std::out_of_range for unknown names.
    const Matrix& at(std::string_view name) const;
};

struct SumResult {
    Matrix inverse;
    DerivationTrace trace;
};

/// Hypothesis sets for the additive results on a pair (a, b).
enum class AdditiveCase {
    AbZero,     // ab = 0
    Thm22,      // aba = 0, bab = 0, a^2b^2 = 0, ab^3 = 0
    Thm22Dual,  // aba = 0, bab = 0, a^2b^2 = 0, a^3b = 0
    Cor23,      // a^2b = 0, ab^2 = 0
    Lem24,      // aba = 0, ab^2 = 0
    Thm25,      // ab^2 = 0, a^2ba = 0, (ba)^2 = 0
    Thm25Dual,  // a^2b = 0, bab^2 = 0, (ba)^2 = 0
};

std::string_view case_id(AdditiveCase c);
/// Accepts the ids produced by case_id ("L2.1", "T2.2", "T2.2d", ...).
bool parse_additive_case(std::string_view id, AdditiveCase& out);
const std::vector<AdditiveCase>& all_additive_cases();

/// Evaluates exactly the products listed for the case.
ConditionReport check_additive(AdditiveCase c, const Matrix& a, const Matrix& b);

/// (a+b)^d for ab = 0:
///   (1 - b b^d) [sum_i b^i (a^d)^i] a^d + b^d [sum_i (b^d)^i a^i] (1 - a a^d)
/// with each series summed over i < terms. The caller supplies a^d and b^d.
/// terms >= dim suffices: b^pi b^i and a^i a^pi vanish once i reaches the
/// index.
Matrix ab_zero_formula(const Matrix& a, const Matrix& ad, const Matrix& b, const Matrix& bd, std::size_t terms);

/// ab_zero_formula with the oracle's a^d, b^d and terms = dim. Throws
/// HypothesisViolation("ab=0") carrying the residual ab otherwise.
Matrix sum_ab_zero(const Matrix& a, const Matrix& b);

/// Cline's formula (xy)^d = x ((yx)^d)^2 y for x: n x m, y: m x n.
Matrix cline(const Matrix& x, const Matrix& y);

/// s^d recovered from the square: (s^2)^d s.
Matrix sqrt_reduction(const Matrix& s);

/// (a+b)^d under aba = bab = a^2b^2 = ab^3 = 0.
///
/// With N = (a; 1)(1, b) and M = N^3 = G + F, F = H + K as in the
/// construction; H^d and K^d by Cline's formula, F^d by the ab = 0 formula
/// (HK = 0), M^d from F^d and the nilpotent G, and finally
/// (a+b)^d = (1, b) N M^d (a; 1), i.e. Cline's formula with
/// (N^d)^2 = N M^d.
SumResult sum_thm22(const Matrix& a, const Matrix& b);
/// Same pipeline with caller-supplied Drazin inverses of the summands.
SumResult sum_thm22(const Matrix& a, const Matrix& ad, const Matrix& b, const Matrix& bd);

/// aba = bab = a^2b^2 = a^3b = 0, via transpose(sum_thm22(b^T, a^T)).
Matrix sum_thm22_dual(const Matrix& a, const Matrix& b);

/// a^2b = ab^2 = 0: (a+b)^2 = p + q with p = a^2 + ab, q = ba + b^2
/// satisfying the T2.2 conditions; then (a+b)^d = ((a+b)^2)^d (a+b).
Matrix sum_cor23(const Matrix& a, const Matrix& b);

/// aba = ab^2 = 0: same p, q but now pq = 0, so the ab = 0 formula applies.
Matrix sum_lem24(const Matrix& a, const Matrix& b);

/// (a+b)^d under ab^2 = a^2ba = (ba)^2 = 0. Same pipeline as sum_thm22 with
/// G = (a^2b + aba, a^3b + abab; 0, a^2b + bab).
SumResult sum_thm25(const Matrix& a, const Matrix& b);
SumResult sum_thm25(const Matrix& a, const Matrix& ad, const Matrix& b, const Matrix& bd);

/// a^2b = bab^2 = (ba)^2 = 0, via transpose(sum_thm25(b^T, a^T)).
Matrix sum_thm25_dual(const Matrix& a, const Matrix& b);

/// Dispatches to the case's formula; AbZero -> sum_ab_zero etc.
Matrix additive_drazin(AdditiveCase c, const Matrix& a, const Matrix& b);

}  // namespace gdrazin
