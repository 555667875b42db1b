#pragma once

#include <stdexcept>
#include <string>

namespace gdrazin {

/// Input rejected before any computation: dimension mismatch, non-square
/// where a square matrix is required, malformed document.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A theorem's annihilation hypothesis does not hold on the given input.
/// `condition()` names the failing product, e.g. "aba=0".
class HypothesisViolation : public std::domain_error {
public:
    HypothesisViolation(const std::string& condition, const std::string& detail)
        : std::domain_error(detail), condition_(condition) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

/// An internal consistency check failed. Never a legitimate outcome: it
/// means either an implementation bug or a false step in a derivation.
class OracleIntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The instance generator gave up after its attempt budget.
class GeneratorExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gdrazin
