#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gdrazin/matrix.hpp"
#include "gdrazin/report.hpp"

namespace gdrazin {

/// Blocks of M = (A B; C D) under the Schur condition D = C A^d B. D is
/// always synthesized; a supplied D is only compared against it.
struct SchurSpec {
    Matrix A, B, C;
    std::optional<Matrix> D;

    std::size_t n() const { return A.rows(); }
    std::size_t m() const { return C.rows(); }
    /// Throws DimensionError unless A is n x n, B n x m, C m x n (and a
    /// supplied D m x m).
    void validate() const;
    Matrix schur_d() const;
    BlockSpec blocks() const;
    Matrix assemble() const;
    friend bool operator==(const SchurSpec&, const SchurSpec&) = default;
};

enum class PertCase { T41, C42, T44, C45, C46 };

std::string_view case_id(PertCase c);
bool parse_pert_case(std::string_view id, PertCase& out);
const std::vector<PertCase>& all_pert_cases();

/// The case's conditions, each as a residual that must vanish, followed by
/// "D=CA^dB" (residual D - C A^d B, zero when D is not supplied).
///
/// The condition written "A^pi CABC" in the four-condition perturbation set
/// is not conformable for m != n; it is read as C A^pi A B C, the term that
/// appears in the block expansion of P^2QP.
ConditionReport check_pert(PertCase c, const SchurSpec& s);

/// Intermediate matrices of the perturbation proofs.
struct PertDerivation {
    Matrix p, q;          // M = P + Q
    Matrix p_d, q_d;
    Matrix inner_sum;     // A^2A^d + BCA^d, or A^2A^d + AA^dBCA^d
    ConditionReport obligations;
    Matrix inverse;
};

/// M^d through the case's proof chain:
///   T4.1/C4.2: P = diag(AA^pi, 0) nilpotent, Q = Q1 + Q2 with Q2 Q1 = 0,
///   Q1 = (AA^d; CA^d)(A, AA^dB) by Cline's formula, then the aba-type sum
///   of P and Q.
///   T4.4/C4.5/C4.6: Q = (0 A^pi B; 0 0), P = P1 + P2 with P2 P1 = 0, then
///   the ab^2-type sum of P and Q.
/// The corollaries first establish ABCA^d = BCAA^d. Throws
/// HypothesisViolation when check_pert fails and OracleIntegrityError when a
/// proof obligation does not hold.
PertDerivation gdrazin_pert_traced(PertCase c, const SchurSpec& s);
Matrix gdrazin_pert(PertCase c, const SchurSpec& s);

/// Whether ABCA^d = BCAA^d. Expected to hold whenever A^2BCA = ABCA^2 and
/// A^pi BCA^2 = 0.
bool derive_commutation(const SchurSpec& s);

/// The proof obligations for the case, evaluated without throwing.
ConditionReport pert_obligations(PertCase c, const SchurSpec& s);

}  // namespace gdrazin
