#pragma once

#include <stdexcept>
#include <string>

namespace triverify {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation would exceed a caller-supplied budget.
// Callers degrade (e.g. to an INCONCLUSIVE verdict) instead of guessing.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// Raised when externally supplied data fails a load-time gate.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace triverify
