#pragma once

#include <string_view>
#include <vector>

#include "gdrazin/matrix.hpp"
#include "gdrazin/report.hpp"

namespace gdrazin {

/// Hypothesis sets for the 2x2 block matrix M = (A B; C D).
enum class BlockCase { T31, C32, T33, C34, L36, L37, T38, C39, L310, T311, C312 };

std::string_view case_id(BlockCase c);
/// Accepts "T3.1", "C3.2", ..., "C3.12".
bool parse_block_case(std::string_view id, BlockCase& out);
const std::vector<BlockCase>& all_block_cases();

/// Evaluates the case's zero-product words in A, B, C, D. The anti-diagonal
/// lemma cases also require the blocks their matrices leave empty to be zero
/// (rows "A=0", "D=0").
ConditionReport check_case(BlockCase c, const BlockSpec& s);

/// M = p + q as used by the case, with the pair's Drazin inverses and the
/// additive-step obligations pq^2 = 0, p^2qp = 0, (qp)^2 = 0.
struct BlockDerivation {
    Matrix p, q;
    Matrix p_d, q_d;
    ConditionReport obligations;
    Matrix inverse;
};

/// M^d through the case's splitting. Throws HypothesisViolation when
/// check_case fails and OracleIntegrityError when a derived step does not
/// hold.
BlockDerivation gdrazin_block_traced(BlockCase c, const BlockSpec& s);
Matrix gdrazin_block(BlockCase c, const BlockSpec& s);

/// Drazin inverse of (0 B; C 0) under (CB)^2 = 0.
Matrix antidiag_drazin(const Matrix& b, const Matrix& c);

/// (A B; 0 D)^d = (A^d S; 0 D^d) with
///   S = sum_i (A^d)^(i+2) B D^i D^pi + sum_i A^pi A^i B (D^d)^(i+2) - A^d B D^d,
/// i = 0..n+m.
Matrix upper_triangular_drazin(const Matrix& a, const Matrix& b, const Matrix& d);
/// (A 0; C D)^d, by transposing the upper-triangular case.
Matrix lower_triangular_drazin(const Matrix& a, const Matrix& c, const Matrix& d);

}  // namespace gdrazin
