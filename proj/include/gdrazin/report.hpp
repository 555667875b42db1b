#pragma once

#include <string>
#include <vector>

#include "gdrazin/matrix.hpp"

namespace gdrazin {

struct Condition {
    std::string name;
    bool holds = false;
    /// The product that must vanish (or the difference of the two sides of
    /// an identity). holds == residual.is_zero().
    Matrix residual;
};

struct ConditionReport {
    std::string case_id;
    std::vector<Condition> conditions;

    /// Records `name` with `residual`; holds is derived from the residual.
    void add(std::string name, Matrix residual);
    /// Records a boolean-only fact (no natural residual, e.g. nilpotency).
    /// The residual stored is the witness matrix when the fact fails and a
    /// 0x0 matrix otherwise.
    void add_fact(std::string name, bool holds, Matrix witness = {});

    bool all_hold() const noexcept;
    const Condition* first_failure() const noexcept;
    const Condition* find(const std::string& name) const noexcept;

    /// Throws HypothesisViolation naming the first failing condition.
    void require() const;
    /// Throws OracleIntegrityError naming the first failing condition.
    void require_integrity(const std::string& context) const;
};

}  // namespace gdrazin
