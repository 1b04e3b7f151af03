#pragma once

#include <cstdint>

#include "syracuse/nat.hpp"

namespace syracuse {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Orbit statistics of an odd seed.
///
/// collatz_steps counts every application of g (each 3x+1 and each halving).
/// peak is the largest value on the g-orbit, which is either the seed or one
/// of the 3x+1 intermediates.
struct TrajectoryStats {
    OddNat seed;
    std::uint64_t collatz_steps = 0;
    std::uint64_t syracuse_steps = 0;
    Nat peak;
    bool reached_one = false;
    bool budget_exhausted = false;

    friend bool operator==(const TrajectoryStats&, const TrajectoryStats&) = default;
};

/// Iterates f from k for at most `budget` steps. Throws std::invalid_argument if budget = 0.
TrajectoryStats orbit_stats(const OddNat& k, std::uint64_t budget = kDefaultBudget);

enum class Membership { Verified, BudgetExceeded };

Membership in_E_bounded(const OddNat& k, std::uint64_t budget = kDefaultBudget);

}  // namespace syracuse
