#pragma once

#include <stdexcept>
#include <string>

namespace sylchar {

/// Invalid input or violated precondition. CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A cycle type for which no closed formula exists; callers should fall
/// back to the enumeration oracle. Subtype of DomainError so unguarded
/// callers still fail with a usage-style error.
class UnsupportedCycleType : public DomainError {
public:
    explicit UnsupportedCycleType(const std::string& what) : DomainError(what) {}
};

/// An enumeration was refused because it exceeds the element budget.
/// Carries the budget that would have been required. CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::string required)
        : std::runtime_error(what + " (required budget: " + required + ")"),
          required_budget(std::move(required)) {}

    std::string required_budget;
};

/// A violated internal consistency check (a proven identity failed to
/// hold). Never recoverable; CLI exit code 1.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sylchar
