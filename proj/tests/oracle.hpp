#pragma once

// Naive reference implementations used only by the tests. Everything here is
// written from the literal definitions with boost::multiprecision::cpp_int and
// shares no code with the library (which uses a 128-bit fast path over GMP).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using big = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                         boost::multiprecision::et_off>;

inline big from_string(const std::string& s) { return big(s); }
inline std::string str(const big& v) { return v.str(); }

inline big g(const big& x) { return (x % 2 == 1) ? 3 * x + 1 : x / 2; }

/// f by repeated application of g: one 3x+1 followed by halvings until odd.
struct FStep {
    big next;
    std::uint64_t n;
};
inline FStep f(const big& k) {
    big x = g(k);
    std::uint64_t n = 0;
    while (x % 2 == 0) {
        x = g(x);
        ++n;
    }
    return {x, n};
}

inline big f_iter(big k, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) k = f(k).next;
    return k;
}

struct Decomp {
    std::uint64_t p;
    big h;
};
inline Decomp decompose(const big& k) {
    big h = k + 1;
    std::uint64_t p = 0;
    while (h % 2 == 0) {
        h /= 2;
        ++p;
    }
    return {p, h};
}

/// 1..6, re-derived from (p, h).
inline int case_of(const big& k) {
    const Decomp d = decompose(k);
    if (d.p == 1) return 1;
    const int r = static_cast<int>(d.h % 3);
    if (r == 0) return 2;
    const bool p_odd = d.p % 2 == 1;
    if (r == 1) return p_odd ? 3 : 5;
    return p_odd ? 6 : 4;
}

inline big pow_big(big base, std::uint64_t e) {
    big r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= base;
    return r;
}

/// Orbit statistics by literal iteration of g.
struct Orbit {
    std::uint64_t collatz_steps = 0;
    std::uint64_t syracuse_steps = 0;
    big peak;
    bool reached_one = false;
};
inline Orbit orbit(const big& seed, std::uint64_t f_budget) {
    Orbit o;
    o.peak = seed;
    big x = seed;
    while (x != 1) {
        if (x % 2 == 1) {
            if (o.syracuse_steps == f_budget) return o;
            ++o.syracuse_steps;
        }
        x = g(x);
        ++o.collatz_steps;
        if (x > o.peak) o.peak = x;
    }
    o.reached_one = true;
    return o;
}

/// Verdict of each registry claim for a single odd k (or exponent p), derived
/// from scratch. nullopt = precondition not met.
inline std::optional<bool> claim_holds(const std::string& claim, const big& k) {
    if (claim == "L1A" || claim == "L1B") {
        const auto p = static_cast<std::uint64_t>(k);
        const bool even = p % 2 == 0;
        if ((claim == "L1A") != even) return std::nullopt;
        const big v = pow_big(2, p) % 3;
        return v == (even ? 1 : 2);
    }
    if (k == 1) return std::nullopt;
    const Decomp d = decompose(k);
    const int c = case_of(k);
    const auto m_of = [&]() -> std::optional<big> {
        if ((4 * k - 1) % 3 != 0) return std::nullopt;
        return (4 * k - 1) / 3;
    };
    const auto r_of = [&](const big& m) -> std::optional<big> {
        if ((4 * m - 1) % 3 != 0) return std::nullopt;
        return (4 * m - 1) / 3;
    };
    if (claim == "C1_DESCENT") {
        if (c != 1) return std::nullopt;
        const big fk = f(k).next;
        return fk <= (3 * d.h - 1) / 2 && fk < k;
    }
    if (claim == "C2_DESCENT") {
        if (c != 2) return std::nullopt;
        const big kbar = pow_big(2, d.p + 1) * (d.h / 3) - 1;
        return f(kbar).next == k && kbar < k;
    }
    if (claim == "C34_M_INTEGRAL") {
        if (c != 3 && c != 4) return std::nullopt;
        const auto m = m_of();
        if (!m) return false;
        const FStep s = f(*m);
        return *m % 2 == 1 && s.next == k && s.n == 2;
    }
    if (claim == "C3_R_INTEGRAL" || claim == "C4_R_INTEGRAL") {
        if (c != (claim == "C3_R_INTEGRAL" ? 3 : 4)) return std::nullopt;
        const auto m = m_of();
        if (!m) return false;
        const auto r = r_of(*m);
        return r.has_value() && *r % 2 == 1 && f(*r).next == *m;
    }
    if (claim == "C3_R_LESS_K" || claim == "C4_R_LESS_K") {
        if (c != (claim == "C3_R_LESS_K" ? 3 : 4)) return std::nullopt;
        const auto r = r_of(*m_of());
        if (!r) return std::nullopt;
        return *r < k;
    }
    if (claim == "C56_NO_PREIMAGE") {
        if (c != 5 && c != 6) return std::nullopt;
        for (std::uint64_t s = 1; s <= 64; ++s) {
            const big t = pow_big(2, s) * k - 1;
            if (t % 3 == 0) return false;
        }
        return k % 3 == 0;
    }
    if (claim == "EXPANSION") {
        if (c != 5 && c != 6) return std::nullopt;
        big prev = k;
        big x = k;
        for (std::uint64_t n = 1; n < d.p; ++n) {
            x = f(x).next;
            if (x != pow_big(3, n) * pow_big(2, d.p - n) * d.h - 1 || !(x > prev)) return false;
            prev = x;
        }
        return true;
    }
    if (claim == "MOD3_CORRELATION") {
        if (d.p < 2) return std::nullopt;
        const int r = static_cast<int>(k % 3);
        if (c == 2) return r == 2;
        if (c == 3 || c == 4) return r == 1;
        return r == 0;
    }
    if (claim == "IDENTITY_16K") {
        if (c != 3 && c != 4) return std::nullopt;
        const auto m = m_of();
        const auto r = r_of(*m);
        if (!r) return std::nullopt;
        return 16 * k == 9 * *r + 7 && f_iter(*r, 2) == k;
    }
    return std::nullopt;
}

struct ClaimScan {
    std::uint64_t checked = 0;
    std::vector<big> counterexamples;
};

/// Ascending scan of [lo, hi]: odd k, or every exponent for L1A/L1B.
inline ClaimScan scan_claim(const std::string& claim, std::uint64_t lo, std::uint64_t hi) {
    ClaimScan out;
    const bool exponents = claim == "L1A" || claim == "L1B";
    for (std::uint64_t v = lo; v <= hi; ++v) {
        if (!exponents && v % 2 == 0) continue;
        const auto verdict = claim_holds(claim, big(v));
        if (!verdict) continue;
        ++out.checked;
        if (!*verdict) out.counterexamples.push_back(big(v));
    }
    return out;
}

}  // namespace oracle
