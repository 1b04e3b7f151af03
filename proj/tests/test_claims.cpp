#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "syracuse/claims.hpp"

using namespace syracuse;

TEST_CASE("L1A over exponents") {
    const ClaimReport r = check_claim(ClaimId::L1A, Nat{1}, Nat{1000});
    CHECK(r.verdict == Verdict::HoldsOnRange);
    CHECK(r.checked_count == 500);
    CHECK_FALSE(r.smallest.has_value());
    CHECK(check_claim(ClaimId::L1B, Nat{0}, Nat{0}).verdict == Verdict::Vacuous);
    CHECK(check_claim(ClaimId::L1A, Nat{0}, Nat{0}).verdict == Verdict::HoldsOnRange);
}

TEST_CASE("C3_R_INTEGRAL fails first at 7") {
    const ClaimReport r = check_claim(ClaimId::C3_R_INTEGRAL, Nat{3}, Nat{1000});
    CHECK(r.verdict == Verdict::Fails);
    CHECK(r.smallest == Nat{7});
    CHECK(r.counterexamples.front() == Nat{7});
}

TEST_CASE("C4_R_LESS_K fails first at 19") {
    const ClaimReport r = check_claim(ClaimId::C4_R_LESS_K, Nat{3}, Nat{1000});
    CHECK(r.verdict == Verdict::Fails);
    CHECK(r.smallest == Nat{19});
}

TEST_CASE("C2_DESCENT holds on [3, 10^6]") {
    const ClaimReport r = check_claim(ClaimId::C2_DESCENT, Nat{3}, Nat{1'000'000});
    CHECK(r.verdict == Verdict::HoldsOnRange);
    CHECK(r.counterexample_count == 0);
    CHECK(r.checked_count > 0);
}

TEST_CASE("antecedent-filtered inputs are counted separately") {
    const ClaimReport r = check_claim(ClaimId::C4_R_LESS_K, Nat{3}, Nat{10'000});
    const auto integral = oracle::scan_claim("C4_R_LESS_K", 3, 10'000).checked;
    const auto in_case = oracle::scan_claim("C4_R_INTEGRAL", 3, 10'000).checked;
    CHECK(r.checked_count == integral);
    CHECK(r.filtered_count == in_case - integral);
}

TEST_CASE("limit caps the collected counterexamples, not the count") {
    const ClaimReport r = check_claim(ClaimId::C3_R_INTEGRAL, Nat{3}, Nat{10'000}, 3);
    const auto scan = oracle::scan_claim("C3_R_INTEGRAL", 3, 10'000);
    REQUIRE(r.counterexamples.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(r.counterexamples[i].to_string() == oracle::str(scan.counterexamples[i]));
    }
    CHECK(r.counterexample_count == scan.counterexamples.size());
}

TEST_CASE("run_all") {
    const auto reports = run_all(Nat{3}, Nat{100'000});
    REQUIRE(reports.size() == 13);
    for (std::size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].claim == kAllClaims[i]);

    const auto single = run_all(Nat{3}, Nat{3});
    for (const ClaimReport& r : single) {
        const ClaimId id = r.claim;
        const bool applies = id == ClaimId::L1B || id == ClaimId::C56_NO_PREIMAGE ||
                             id == ClaimId::EXPANSION || id == ClaimId::MOD3_CORRELATION;
        CHECK_MESSAGE((r.verdict == Verdict::Vacuous) != applies, claim_info(id).name);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(run_all(Nat{5}, Nat{3}), std::invalid_argument);
    CHECK_THROWS_AS(check_claim(ClaimId::L1A, Nat{5}, Nat{3}), std::invalid_argument);
    CHECK_THROWS_AS(check_claim(ClaimId::L1A, Nat{1}, Nat{3}, 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_claim_id("C7_DESCENT"), std::invalid_argument);
    CHECK(parse_claim_id("IDENTITY_16K") == ClaimId::IDENTITY_16K);
}

TEST_CASE("reports do not depend on the worker count") {
    for (ClaimId id : kAllClaims) {
        const ClaimReport one = check_claim(id, Nat{3}, Nat{60'001}, 5, 1);
        CHECK(check_claim(id, Nat{3}, Nat{60'001}, 5, 4) == one);
        CHECK(check_claim(id, Nat{3}, Nat{60'001}, 5, 16) == one);
    }
}

TEST_CASE("verdicts agree with the naive oracle on [3, 10^4]") {
    for (ClaimId id : kAllClaims) {
        const std::string name{claim_info(id).name};
        const ClaimReport r = check_claim(id, Nat{3}, Nat{10'000}, 1000);
        const auto scan = oracle::scan_claim(name, 3, 10'000);
        CAPTURE(name);
        CHECK(r.checked_count == scan.checked);
        CHECK(r.counterexample_count == scan.counterexamples.size());
        REQUIRE(r.counterexamples.size() == scan.counterexamples.size());
        for (std::size_t i = 0; i < scan.counterexamples.size(); ++i) {
            CHECK(r.counterexamples[i].to_string() == oracle::str(scan.counterexamples[i]));
        }
        const Verdict expected = scan.checked == 0              ? Verdict::Vacuous
                                 : scan.counterexamples.empty() ? Verdict::HoldsOnRange
                                                                : Verdict::Fails;
        CHECK(r.verdict == expected);
    }
}

TEST_CASE("failing claims keep failing on larger ranges with the same smallest counterexample") {
    for (ClaimId id : kAllClaims) {
        const ClaimReport small = check_claim(id, Nat{3}, Nat{1001});
        if (small.verdict != Verdict::Fails) continue;
        for (std::uint64_t hi : {5001ULL, 20001ULL}) {
            const ClaimReport big = check_claim(id, Nat{3}, Nat{hi});
            CHECK(big.verdict == Verdict::Fails);
            CHECK(big.smallest == small.smallest);
        }
    }
}
