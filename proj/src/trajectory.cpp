#include "syracuse/trajectory.hpp"

#include <stdexcept>

#include "syracuse/core.hpp"

namespace syracuse {

TrajectoryStats orbit_stats(const OddNat& k, std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("budget must be at least 1");
    TrajectoryStats stats{k, 0, 0, k.value(), false, false};
    const Nat one{1};
    OddNat x = k;
    while (x.value() != one) {
        if (stats.syracuse_steps == budget) {
            stats.budget_exhausted = true;
            return stats;
        }
        const Nat lifted = x.value() * Nat{3} + one;
        if (lifted > stats.peak) stats.peak = lifted;
        const std::uint64_t n = lifted.trailing_zeros();
        x = OddNat{lifted >> n};
        stats.syracuse_steps += 1;
        stats.collatz_steps += 1 + n;
    }
    stats.reached_one = true;
    return stats;
}

Membership in_E_bounded(const OddNat& k, std::uint64_t budget) {
    return orbit_stats(k, budget).reached_one ? Membership::Verified : Membership::BudgetExceeded;
}

}  // namespace syracuse
