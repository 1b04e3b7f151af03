#include "syracuse/core.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace syracuse {
namespace {

constexpr std::array<std::string_view, 6> kCaseNames = {"Case1", "Case2", "Case3",
                                                        "Case4", "Case5", "Case6"};

}  // namespace

std::string_view case_name(CaseKind kind) { return kCaseNames[static_cast<std::size_t>(kind)]; }

CaseKind parse_case(std::string_view name) {
    for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
        if (kCaseNames[i] == name) return static_cast<CaseKind>(i);
    }
    throw std::invalid_argument("unknown case name: " + std::string(name));
}

Nat g_step(const Nat& x) {
    if (x.is_zero()) throw std::invalid_argument("g is defined on positive integers only");
    if (x.is_odd()) return x * Nat{3} + Nat{1};
    return x >> 1;
}

SyracuseStep f_step(const OddNat& k) {
    if (auto small = k.value().to_u128(); small && *small <= (~u128{0} - 1) / 3) {
        const u128 t = *small * 3 + 1;
        const auto lo = static_cast<std::uint64_t>(t);
        const std::uint64_t n = lo != 0 ? static_cast<std::uint64_t>(__builtin_ctzll(lo))
                                        : 64 + static_cast<std::uint64_t>(
                                                   __builtin_ctzll(static_cast<std::uint64_t>(t >> 64)));
        return {OddNat{Nat::from_u128(t >> n)}, n};
    }
    const Nat t = k.value() * Nat{3} + Nat{1};
    const std::uint64_t n = t.trailing_zeros();
    return {OddNat{t >> n}, n};
}

OddNat f_iterate(const OddNat& k, std::uint64_t count) {
    OddNat x = k;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (x.value() == Nat{1}) break;  // fixed point
        x = f_step(x).next;
    }
    return x;
}

Decomposition decompose(const OddNat& k) {
    const Nat k1 = k.value() + Nat{1};
    const std::uint64_t p = k1.trailing_zeros();
    return {k, p, OddNat{k1 >> p}};
}

CaseTag classify(const OddNat& k) {
    if (k.value() == Nat{1}) {
        throw std::invalid_argument("k = 1 is terminal and has no case");
    }
    return classify(decompose(k));
}

CaseTag classify(const Decomposition& d) {
    if (d.k.value() == Nat{1}) {
        throw std::invalid_argument("k = 1 is terminal and has no case");
    }
    if (d.p == 1) return {CaseKind::Case1, std::nullopt, std::nullopt};

    const std::uint32_t residue = d.h.value().mod3();
    if (residue == 0) {
        return {CaseKind::Case2, std::nullopt, OddNat{*d.h.value().div_exact_small(3)}};
    }
    // h = 3*ell + residue
    Nat ell = *(d.h.value() - Nat{residue}).div_exact_small(3);
    const bool p_odd = d.p % 2 == 1;
    CaseKind kind{};
    if (residue == 1) {
        kind = p_odd ? CaseKind::Case3 : CaseKind::Case5;
    } else {
        kind = p_odd ? CaseKind::Case6 : CaseKind::Case4;
    }
    return {kind, std::move(ell), std::nullopt};
}

}  // namespace syracuse
