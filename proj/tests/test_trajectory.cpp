#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "syracuse/core.hpp"
#include "syracuse/trajectory.hpp"

using namespace syracuse;

TEST_CASE("orbit_stats examples") {
    const TrajectoryStats one = orbit_stats(OddNat{1});
    CHECK(one.collatz_steps == 0);
    CHECK(one.syracuse_steps == 0);
    CHECK(one.peak == Nat{1});
    CHECK(one.reached_one);

    const TrajectoryStats five = orbit_stats(OddNat{5});
    CHECK(five.collatz_steps == 5);
    CHECK(five.syracuse_steps == 1);
    CHECK(five.peak == Nat{16});
    CHECK(five.reached_one);

    const TrajectoryStats t27 = orbit_stats(OddNat{27});
    CHECK(t27.collatz_steps == 111);
    CHECK(t27.syracuse_steps == 41);
    CHECK(t27.peak == Nat{9232});
}

TEST_CASE("budget exhaustion is reported, not thrown") {
    CHECK(in_E_bounded(OddNat{1}, 10) == Membership::Verified);
    CHECK(in_E_bounded(OddNat{27}, 1'000'000) == Membership::Verified);
    CHECK(in_E_bounded(OddNat{27}, 3) == Membership::BudgetExceeded);
    const TrajectoryStats partial = orbit_stats(OddNat{27}, 3);
    CHECK(partial.budget_exhausted);
    CHECK_FALSE(partial.reached_one);
    CHECK(partial.syracuse_steps == 3);
    CHECK(orbit_stats(OddNat{27}, 41).reached_one);
    CHECK(orbit_stats(OddNat{27}, 40).budget_exhausted);
    CHECK_THROWS_AS(orbit_stats(OddNat{3}, 0), std::invalid_argument);
}

TEST_CASE("orbit_stats matches the naive g iteration on [1, 10^5]") {
    for (std::uint64_t k = 1; k <= 100'000; k += 2) {
        const TrajectoryStats s = orbit_stats(OddNat{k});
        const oracle::Orbit o = oracle::orbit(k, kDefaultBudget);
        REQUIRE(s.reached_one == o.reached_one);
        REQUIRE_FALSE(s.budget_exhausted);
        REQUIRE(s.collatz_steps == o.collatz_steps);
        REQUIRE(s.syracuse_steps == o.syracuse_steps);
        REQUIRE(s.peak.to_string() == oracle::str(o.peak));
        REQUIRE(f_iterate(OddNat{k}, s.syracuse_steps) == OddNat{1});
    }
}

TEST_CASE("step-count identities") {
    for (std::uint64_t k = 1; k <= 20'001; k += 2) {
        const TrajectoryStats s = orbit_stats(OddNat{k});
        REQUIRE(s.peak >= Nat{k});
        if (k == 1) {
            REQUIRE(s.syracuse_steps == s.collatz_steps);
        } else {
            REQUIRE(s.syracuse_steps < s.collatz_steps);
        }
        std::uint64_t valuations = 0;
        OddNat x{k};
        while (x.value() != Nat{1}) {
            const SyracuseStep step = f_step(x);
            valuations += step.valuation;
            x = step.next;
        }
        REQUIRE(s.collatz_steps == s.syracuse_steps + valuations);
    }
}

TEST_CASE("orbits of seeds past 128 bits") {
    const OddNat seed{Nat::pow2(140) - Nat{1}};
    const TrajectoryStats s = orbit_stats(seed);
    const oracle::Orbit o = oracle::orbit(oracle::pow_big(2, 140) - 1, kDefaultBudget);
    CHECK(s.reached_one);
    CHECK(s.collatz_steps == o.collatz_steps);
    CHECK(s.peak.to_string() == oracle::str(o.peak));
}
