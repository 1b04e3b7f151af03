#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "syracuse/nat.hpp"

namespace syracuse {

/// Odd k written as k = 2^p * h - 1 with h odd; p is the 2-adic valuation of k + 1.
struct Decomposition {
    OddNat k;
    std::uint64_t p;
    OddNat h;
};

enum class CaseKind { Case1, Case2, Case3, Case4, Case5, Case6 };

std::string_view case_name(CaseKind kind);
/// Inverse of case_name. Throws std::invalid_argument.
CaseKind parse_case(std::string_view name);

/// One of the six mutually exclusive residue/parity classes of an odd k >= 3.
///
///   Case1  p = 1
///   Case2  p >= 2, h = 3*hbar
///   Case3  p >= 2, p odd,  h = 3*ell + 1
///   Case4  p >= 2, p even, h = 3*ell + 2
///   Case5  p >= 2, p even, h = 3*ell + 1
///   Case6  p >= 2, p odd,  h = 3*ell + 2
struct CaseTag {
    CaseKind kind;
    std::optional<Nat> ell;      // Cases 3-6
    std::optional<OddNat> hbar;  // Case2

    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// One application of f: 3k + 1 = 2^valuation * next.
struct SyracuseStep {
    OddNat next;
    std::uint64_t valuation;

    friend bool operator==(const SyracuseStep&, const SyracuseStep&) = default;
};

/// The Collatz map: 3x+1 for odd x, x/2 for even x. Throws std::invalid_argument on 0.
Nat g_step(const Nat& x);

SyracuseStep f_step(const OddNat& k);
OddNat f_iterate(const OddNat& k, std::uint64_t count);

Decomposition decompose(const OddNat& k);

/// Throws std::invalid_argument for k = 1 (terminal, not classified).
CaseTag classify(const OddNat& k);
CaseTag classify(const Decomposition& d);

/// 2^p mod 3 by the parity rule: 1 for even p, 2 for odd p.
constexpr std::uint32_t pow2_mod3(std::uint64_t p) { return (p % 2 == 0) ? 1 : 2; }

}  // namespace syracuse
