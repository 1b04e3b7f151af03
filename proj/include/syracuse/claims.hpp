#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "syracuse/nat.hpp"

namespace syracuse {

enum class ClaimId {
    L1A,
    L1B,
    C1_DESCENT,
    C2_DESCENT,
    C34_M_INTEGRAL,
    C3_R_INTEGRAL,
    C4_R_INTEGRAL,
    C3_R_LESS_K,
    C4_R_LESS_K,
    C56_NO_PREIMAGE,
    EXPANSION,
    MOD3_CORRELATION,
    IDENTITY_16K,
};

inline constexpr std::array<ClaimId, 13> kAllClaims = {
    ClaimId::L1A,           ClaimId::L1B,           ClaimId::C1_DESCENT,  ClaimId::C2_DESCENT,
    ClaimId::C34_M_INTEGRAL, ClaimId::C3_R_INTEGRAL, ClaimId::C4_R_INTEGRAL, ClaimId::C3_R_LESS_K,
    ClaimId::C4_R_LESS_K,   ClaimId::C56_NO_PREIMAGE, ClaimId::EXPANSION,  ClaimId::MOD3_CORRELATION,
    ClaimId::IDENTITY_16K,
};

/// Registry entry: what is scanned, which inputs qualify, and what must hold.
struct ClaimInfo {
    ClaimId id;
    std::string_view name;
    std::string_view domain;     // "exponent p" or "odd k"
    std::string_view precondition;
    std::string_view statement;
};

const ClaimInfo& claim_info(ClaimId id);
/// Throws std::invalid_argument for an unknown name.
ClaimId parse_claim_id(std::string_view name);

enum class Verdict { HoldsOnRange, Fails, Vacuous };
std::string_view verdict_name(Verdict v);
Verdict parse_verdict(std::string_view name);

struct ClaimReport {
    ClaimId claim;
    Nat lo;
    Nat hi;
    std::string_view case_filter;
    std::uint64_t checked_count = 0;
    /// In-case inputs whose antecedent (e.g. integral r) failed; not evaluated.
    std::uint64_t filtered_count = 0;
    std::uint64_t counterexample_count = 0;
    std::vector<Nat> counterexamples;  // ascending, at most `limit`
    std::optional<Nat> smallest;
    Verdict verdict = Verdict::Vacuous;

    friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

/// Scans [lo, hi] (odd k, or every exponent p for L1A/L1B) and evaluates the
/// claim wherever its precondition holds. `workers` = 0 uses the OpenMP default.
ClaimReport check_claim(ClaimId claim, const Nat& lo, const Nat& hi, std::uint64_t limit = 10,
                        unsigned workers = 0);

/// One report per registry entry, in registry order.
std::vector<ClaimReport> run_all(const Nat& lo, const Nat& hi, std::uint64_t limit = 10,
                                 unsigned workers = 0);

}  // namespace syracuse
