#include "parastab/budget.hpp"

#include <cstdlib>
#include <string>

#include "parastab/errors.hpp"

namespace parastab {

Budget Budget::from_env() {
    if (const char* env = std::getenv("PARASTAB_BUDGET"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0') return Budget(v);
        throw ValidationError(std::string("PARASTAB_BUDGET is not a non-negative integer: ") + env);
    }
    return Budget();
}

void Budget::require(std::uint64_t visits) const {
    if (visits > remaining()) {
        throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(used_) + " used, " +
                             std::to_string(visits) + " more requested, limit " + std::to_string(limit_));
    }
}

void Budget::charge(std::uint64_t visits) {
    require(visits);
    used_ += visits;
}

}  // namespace parastab
