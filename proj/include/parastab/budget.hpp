#pragma once

#include <cstdint>

namespace parastab {

/// Counts enumeration visits (subspaces, bases) against a fixed limit.
class Budget {
public:
    static constexpr std::uint64_t kDefaultLimit = 1'000'000;

    explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    /// Limit from PARASTAB_BUDGET when set, otherwise kDefaultLimit.
    static Budget from_env();

    /// Throws BudgetExceeded when the running total would pass the limit.
    void charge(std::uint64_t visits);

    /// Throws without charging when `visits` more would not fit.
    void require(std::uint64_t visits) const;

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }
    std::uint64_t remaining() const noexcept { return limit_ - used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace parastab
