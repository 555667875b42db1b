#include "gdrazin/report.hpp"

#include <algorithm>
#include <utility>

#include "gdrazin/errors.hpp"

namespace gdrazin {

void ConditionReport::add(std::string name, Matrix residual) {
    const bool holds = residual.is_zero();
    conditions.push_back(Condition{std::move(name), holds, std::move(residual)});
}

void ConditionReport::add_fact(std::string name, bool holds, Matrix witness) {
    conditions.push_back(Condition{std::move(name), holds, holds ? Matrix{} : std::move(witness)});
}

bool ConditionReport::all_hold() const noexcept {
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.holds; });
}

const Condition* ConditionReport::first_failure() const noexcept {
    for (const auto& c : conditions)
        if (!c.holds) return &c;
    return nullptr;
}

const Condition* ConditionReport::find(const std::string& name) const noexcept {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

void ConditionReport::require() const {
    if (const Condition* c = first_failure()) {
        throw HypothesisViolation(c->name, case_id + ": hypothesis " + c->name + " fails; residual " +
                                               c->residual.to_string());
    }
}

void ConditionReport::require_integrity(const std::string& context) const {
    if (const Condition* c = first_failure()) {
        throw OracleIntegrityError(context + ": " + c->name + " fails; residual " + c->residual.to_string());
    }
}

}  // namespace gdrazin
