#pragma once

// Per-seed orbit kernels for range verification. The fixed-width kernel runs in
// 64-bit words while the orbit fits and in 128-bit words after that; it reports
// overflow instead of wrapping, and the caller reruns the seed with orbit_exact.

#include <bit>
#include <cstdint>

#include "syracuse/nat.hpp"

namespace syracuse::kernel {

enum class SeedStatus : std::uint8_t { Verified, BudgetExceeded, Failure };

struct FastOrbit {
    SeedStatus status;
    bool overflow;
    bool complete;  // the orbit reached 1, so the statistics cover the whole orbit
    std::uint64_t collatz_steps;
    u128 peak;
};

struct ExactOrbit {
    SeedStatus status;
    bool complete;
    std::uint64_t collatz_steps;
    Nat peak;
};

namespace detail {

inline unsigned ctz(std::uint64_t v) { return static_cast<unsigned>(std::countr_zero(v)); }
inline unsigned ctz(u128 v) {
    const auto lo = static_cast<std::uint64_t>(v);
    return lo != 0 ? ctz(lo) : 64 + ctz(static_cast<std::uint64_t>(v >> 64));
}

template <typename Word>
inline constexpr Word kLiftLimit = (~Word{0} - 1) / 3;

struct State {
    u128 x;
    std::uint64_t f_steps;
    std::uint64_t collatz_steps;
    u128 peak;
    bool below;
};

// Runs f in `Word` arithmetic until x = 1, the budget is spent, x returns to the
// seed, or x exceeds the word. Returns false when x left the word's range.
template <typename Word>
inline bool advance(State& s, u128 seed, std::uint64_t budget, u128 threshold,
                    SeedStatus& status, bool& done) {
    Word x = static_cast<Word>(s.x);
    Word peak = s.peak > static_cast<u128>(~Word{0}) ? ~Word{0} : static_cast<Word>(s.peak);
    std::uint64_t f_steps = s.f_steps;
    std::uint64_t collatz = s.collatz_steps;
    bool below = s.below;
    bool in_range = true;
    done = false;
    while (true) {
        if (x == 1) {
            status = SeedStatus::Verified;
            done = true;
            break;
        }
        if (f_steps == budget) {
            status = below ? SeedStatus::Verified : SeedStatus::BudgetExceeded;
            done = true;
            break;
        }
        if (x > kLiftLimit<Word>) {
            in_range = false;
            break;
        }
        const Word lifted = 3 * x + 1;
        if (lifted > peak) peak = lifted;
        const unsigned n = ctz(lifted);
        x = lifted >> n;
        ++f_steps;
        collatz += 1 + n;
        if (x < threshold) below = true;
        if (x == seed) {
            status = SeedStatus::Failure;
            done = true;
            break;
        }
    }
    s.x = x;
    if (static_cast<u128>(peak) > s.peak) s.peak = peak;
    s.f_steps = f_steps;
    s.collatz_steps = collatz;
    s.below = below;
    return in_range;
}

}  // namespace detail

/// Full f-orbit of `seed` with a verdict. Dropping strictly below `threshold`
/// counts as verified even if the budget runs out before the orbit reaches 1.
inline FastOrbit orbit_fast(u128 seed, std::uint64_t budget, u128 threshold) {
    detail::State s{seed, 0, 0, seed, false};
    SeedStatus status = SeedStatus::Verified;
    bool done = false;
    if (seed <= ~std::uint64_t{0}) {
        detail::advance<std::uint64_t>(s, seed, budget, threshold, status, done);
    }
    if (!done && !detail::advance<u128>(s, seed, budget, threshold, status, done)) {
        return {SeedStatus::Verified, true, false, 0, 0};
    }
    const bool complete = s.x == 1;
    return {status, false, complete, s.collatz_steps, s.peak};
}

/// Arbitrary-precision counterpart of orbit_fast.
ExactOrbit orbit_exact(const Nat& seed, std::uint64_t budget, const Nat& threshold);

}  // namespace syracuse::kernel
