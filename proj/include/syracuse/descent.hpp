#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syracuse/core.hpp"

namespace syracuse {

/// f(from) = to with 3*from + 1 = 2^valuation * to, checked by calling f_step.
struct VerifiedRelation {
    OddNat from;
    OddNat to;
    std::uint64_t valuation;
};

/// Exact verdict on whether numerator / denominator is an integer.
struct IntegralityFlag {
    std::string formula;
    bool integral;
    Nat numerator;
    Nat denominator;
};

/// Sign of (witness - k).
struct Comparison {
    std::string label;
    OddNat witness;
    int sign;
};

/// Evidence for Cases 5 and 6: k is divisible by 3, so no odd m satisfies f(m) = k.
struct NoPreimageEvidence {
    std::uint32_t k_mod3;
    std::uint64_t s_max_scanned;
    std::uint64_t preimages_found;
};

struct DescentWitness {
    CaseTag tag;
    std::vector<OddNat> witness_chain;
    std::vector<VerifiedRelation> relations;
    std::vector<IntegralityFlag> integrality_flags;
    std::vector<Comparison> comparisons;
    std::optional<NoPreimageEvidence> no_preimage;
};

struct RQuotient {
    bool integral;
    Nat numerator;    // 4m - 1
    Nat denominator;  // 3
    std::optional<OddNat> r;
};

struct IdentityCheck {
    Nat lhs;  // 16k
    Nat rhs;  // 9r + 7
    int r_minus_k_sign;
};

struct Preimage {
    OddNat m;
    std::uint64_t s;

    friend bool operator==(const Preimage&, const Preimage&) = default;
};

struct PreimageSet {
    OddNat k;
    std::uint64_t s_max;
    std::vector<Preimage> members;  // ascending in s, hence in m
};

/// Throws std::logic_error when f_step disagrees with the expected relation.
VerifiedRelation verify_relation(const OddNat& from, const OddNat& to,
                                 std::optional<std::uint64_t> expected_valuation = std::nullopt);

/// Case1: f(k) < k. Rejects k = 1 and inputs outside Case1.
DescentWitness case1_witness(const OddNat& k);

/// Case2: kbar = 2^(p+1) * hbar - 1 satisfies f(kbar) = k and kbar < k.
DescentWitness case2_predecessor(const OddNat& k);

/// Cases 3 and 4: m = (4k - 1)/3 with f(m) = k and valuation 2.
OddNat case34_m(const OddNat& k);

/// r = (4m - 1)/3 when integral, otherwise the exact non-integral quotient.
RQuotient case34_r(const OddNat& m);

/// Asserts 16k = 9r + 7 (throws std::logic_error otherwise) and reports sign(r - k).
IdentityCheck case34_identity_check(const OddNat& k, const OddNat& r);

/// All odd m with 3m + 1 = 2^s * k for 1 <= s <= s_max.
PreimageSet preimages(const OddNat& k, std::uint64_t s_max);

/// 3^n * 2^(p-n) * h - 1, cross-checked against f_iterate(k, n). Requires 1 <= n <= p-1.
OddNat expansion(const Decomposition& d, std::uint64_t n);

struct PeakValue {
    Nat pre_division;  // 3^p * h - 1
    OddNat odd_part;
    std::uint64_t valuation;
};

/// Requires p >= 2. Asserts odd_part == f_iterate(k, p).
PeakValue peak_value(const Decomposition& d);

/// Reconstructs the decomposition for (p, h); throws std::invalid_argument if p = 0.
Decomposition compose(std::uint64_t p, const OddNat& h);

/// Dispatches on classify(k) to the matching witness construction.
DescentWitness descend(const OddNat& k);

inline constexpr std::uint64_t kNoPreimageScan = 64;

}  // namespace syracuse
