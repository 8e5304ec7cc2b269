#pragma once

#include <stdexcept>
#include <string>

namespace sylv {

// Division by an exact zero (scalar or polynomial).
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& msg) : std::domain_error(msg) {}
};

// Out-of-range indices, duplicate roots, non-monic input, and similar
// violations of an operation's stated domain.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Matrix shape violations: non-square determinant, dimension mismatch.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// The requested construction has no defined value for these parameters.
struct NotApplicable : DomainError {
    explicit NotApplicable(const std::string& msg) : DomainError(msg) {}
};

} // namespace sylv
