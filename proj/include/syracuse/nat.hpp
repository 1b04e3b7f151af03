#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace syracuse {

using u128 = unsigned __int128;

/// Arbitrary-precision non-negative integer.
///
/// Values that fit in two machine words are held inline as a `u128`; every
/// operation on that representation is overflow-checked and escalates to a
/// GMP integer instead of wrapping. Results are always renormalized, so two
/// equal values share the same representation.
class Nat {
public:
    Nat() = default;
    Nat(std::uint64_t v) : rep_(u128{v}) {}  // NOLINT(google-explicit-constructor)
    static Nat from_u128(u128 v) {
        Nat n;
        n.rep_ = v;
        return n;
    }
    static Nat from_mpz(const mpz_class& v);

    /// Parses a decimal string of digits only. Throws std::invalid_argument.
    static Nat parse(std::string_view text);

    static Nat pow2(std::uint64_t e);
    static Nat pow(const Nat& base, std::uint64_t e);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] mpz_class to_mpz() const;

    [[nodiscard]] bool is_small() const { return std::holds_alternative<u128>(rep_); }
    [[nodiscard]] std::optional<u128> to_u128() const;
    [[nodiscard]] std::optional<std::uint64_t> to_u64() const;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_odd() const;
    [[nodiscard]] bool is_even() const { return !is_odd(); }

    /// 2-adic valuation. Precondition: nonzero.
    [[nodiscard]] std::uint64_t trailing_zeros() const;
    [[nodiscard]] std::uint32_t mod_small(std::uint32_t divisor) const;
    [[nodiscard]] std::uint32_t mod3() const { return mod_small(3); }

    /// Exact division by a small divisor; returns nullopt when it does not divide.
    [[nodiscard]] std::optional<Nat> div_exact_small(std::uint32_t divisor) const;

    [[nodiscard]] std::uint64_t bit_length() const;

    friend Nat operator+(const Nat& a, const Nat& b);
    /// Throws std::domain_error when b > a.
    friend Nat operator-(const Nat& a, const Nat& b);
    friend Nat operator*(const Nat& a, const Nat& b);
    friend Nat operator<<(const Nat& a, std::uint64_t bits);
    friend Nat operator>>(const Nat& a, std::uint64_t bits);

    Nat& operator+=(const Nat& b) { return *this = *this + b; }
    Nat& operator-=(const Nat& b) { return *this = *this - b; }
    Nat& operator*=(const Nat& b) { return *this = *this * b; }
    Nat& operator<<=(std::uint64_t bits) { return *this = *this << bits; }
    Nat& operator>>=(std::uint64_t bits) { return *this = *this >> bits; }

    friend bool operator==(const Nat& a, const Nat& b);
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b);

private:
    void normalize();

    std::variant<u128, mpz_class> rep_{u128{0}};
};

std::string to_string(u128 v);

/// Positive odd integer.
class OddNat {
public:
    /// Throws std::invalid_argument unless `v` is odd.
    explicit OddNat(Nat v);
    OddNat(std::uint64_t v) : OddNat(Nat{v}) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] const Nat& value() const { return value_; }
    operator const Nat&() const { return value_; }  // NOLINT(google-explicit-constructor)
    [[nodiscard]] std::string to_string() const { return value_.to_string(); }

    friend bool operator==(const OddNat&, const OddNat&) = default;
    friend std::strong_ordering operator<=>(const OddNat& a, const OddNat& b) {
        return a.value_ <=> b.value_;
    }

private:
    Nat value_;
};

}  // namespace syracuse
