#pragma once

#include <stdexcept>

namespace hprod {

/// An enumeration would exceed its configured size budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoLogicalOperators : std::runtime_error {
    NoLogicalOperators() : std::runtime_error("no logical operators (k = 0), distance undefined") {}
};

}  // namespace hprod
