#include "syracuse/nat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace syracuse {
namespace {

constexpr u128 kU128Max = ~u128{0};

mpz_class mpz_from_u128(u128 v) {
    mpz_class hi{static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64))};
    mpz_class lo{static_cast<unsigned long>(static_cast<std::uint64_t>(v))};
    return (hi << 64) + lo;
}

std::uint64_t ctz128(u128 v) {
    const auto lo = static_cast<std::uint64_t>(v);
    if (lo != 0) return static_cast<std::uint64_t>(std::countr_zero(lo));
    return 64 + static_cast<std::uint64_t>(std::countr_zero(static_cast<std::uint64_t>(v >> 64)));
}

std::uint64_t bitlen128(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) return 128 - static_cast<std::uint64_t>(std::countl_zero(hi));
    return 64 - static_cast<std::uint64_t>(std::countl_zero(static_cast<std::uint64_t>(v)));
}

}  // namespace

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

void Nat::normalize() {
    if (auto* big = std::get_if<mpz_class>(&rep_)) {
        if (mpz_sizeinbase(big->get_mpz_t(), 2) <= 128) {
            const mpz_class hi = *big >> 64;
            const mpz_class lo = *big - (hi << 64);
            const u128 v = (u128{hi.get_ui()} << 64) | u128{lo.get_ui()};
            rep_ = v;
        }
    }
}

Nat Nat::from_mpz(const mpz_class& v) {
    if (sgn(v) < 0) throw std::domain_error("Nat cannot hold a negative value");
    Nat n;
    n.rep_ = v;
    n.normalize();
    return n;
}

Nat Nat::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed integer literal: '" + std::string(text) + "'");
        }
    }
    u128 acc = 0;
    bool small = true;
    for (char c : text) {
        const u128 digit = static_cast<u128>(c - '0');
        if (acc > (kU128Max - digit) / 10) {
            small = false;
            break;
        }
        acc = acc * 10 + digit;
    }
    if (small) return from_u128(acc);
    return from_mpz(mpz_class(std::string(text), 10));
}

Nat Nat::pow2(std::uint64_t e) { return Nat{1} << e; }

Nat Nat::pow(const Nat& base, std::uint64_t e) {
    Nat result{1};
    Nat b = base;
    while (e != 0) {
        if ((e & 1U) != 0) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

std::string Nat::to_string() const {
    if (const auto* v = std::get_if<u128>(&rep_)) return syracuse::to_string(*v);
    return std::get<mpz_class>(rep_).get_str(10);
}

mpz_class Nat::to_mpz() const {
    if (const auto* v = std::get_if<u128>(&rep_)) return mpz_from_u128(*v);
    return std::get<mpz_class>(rep_);
}

std::optional<u128> Nat::to_u128() const {
    if (const auto* v = std::get_if<u128>(&rep_)) return *v;
    return std::nullopt;
}

std::optional<std::uint64_t> Nat::to_u64() const {
    if (const auto* v = std::get_if<u128>(&rep_); v != nullptr && (*v >> 64) == 0) {
        return static_cast<std::uint64_t>(*v);
    }
    return std::nullopt;
}

bool Nat::is_zero() const {
    if (const auto* v = std::get_if<u128>(&rep_)) return *v == 0;
    return false;
}

bool Nat::is_odd() const {
    if (const auto* v = std::get_if<u128>(&rep_)) return (*v & 1U) != 0;
    return mpz_odd_p(std::get<mpz_class>(rep_).get_mpz_t()) != 0;
}

std::uint64_t Nat::trailing_zeros() const {
    if (const auto* v = std::get_if<u128>(&rep_)) {
        if (*v == 0) throw std::domain_error("2-adic valuation of zero");
        return ctz128(*v);
    }
    return mpz_scan1(std::get<mpz_class>(rep_).get_mpz_t(), 0);
}

std::uint32_t Nat::mod_small(std::uint32_t divisor) const {
    if (divisor == 0) throw std::domain_error("division by zero");
    if (const auto* v = std::get_if<u128>(&rep_)) return static_cast<std::uint32_t>(*v % divisor);
    return static_cast<std::uint32_t>(mpz_fdiv_ui(std::get<mpz_class>(rep_).get_mpz_t(), divisor));
}

std::optional<Nat> Nat::div_exact_small(std::uint32_t divisor) const {
    if (mod_small(divisor) != 0) return std::nullopt;
    if (const auto* v = std::get_if<u128>(&rep_)) return from_u128(*v / divisor);
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), std::get<mpz_class>(rep_).get_mpz_t(), divisor);
    return from_mpz(q);
}

std::uint64_t Nat::bit_length() const {
    if (const auto* v = std::get_if<u128>(&rep_)) return bitlen128(*v);
    return mpz_sizeinbase(std::get<mpz_class>(rep_).get_mpz_t(), 2);
}

Nat operator+(const Nat& a, const Nat& b) {
    if (a.is_small() && b.is_small()) {
        const u128 x = std::get<u128>(a.rep_);
        const u128 y = std::get<u128>(b.rep_);
        const u128 sum = x + y;
        if (sum >= x) return Nat::from_u128(sum);
    }
    return Nat::from_mpz(a.to_mpz() + b.to_mpz());
}

Nat operator-(const Nat& a, const Nat& b) {
    if (a < b) throw std::domain_error("Nat subtraction would go negative");
    if (a.is_small()) return Nat::from_u128(std::get<u128>(a.rep_) - std::get<u128>(b.rep_));
    return Nat::from_mpz(a.to_mpz() - b.to_mpz());
}

Nat operator*(const Nat& a, const Nat& b) {
    if (a.is_small() && b.is_small()) {
        u128 product = 0;
        if (!__builtin_mul_overflow(std::get<u128>(a.rep_), std::get<u128>(b.rep_), &product)) {
            return Nat::from_u128(product);
        }
    }
    return Nat::from_mpz(a.to_mpz() * b.to_mpz());
}

Nat operator<<(const Nat& a, std::uint64_t bits) {
    if (a.is_zero()) return a;
    if (a.is_small() && a.bit_length() + bits <= 128) {
        return Nat::from_u128(bits >= 128 ? 0 : std::get<u128>(a.rep_) << bits);
    }
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), a.to_mpz().get_mpz_t(), bits);
    return Nat::from_mpz(out);
}

Nat operator>>(const Nat& a, std::uint64_t bits) {
    if (a.is_small()) {
        return Nat::from_u128(bits >= 128 ? 0 : std::get<u128>(a.rep_) >> bits);
    }
    mpz_class out;
    mpz_fdiv_q_2exp(out.get_mpz_t(), std::get<mpz_class>(a.rep_).get_mpz_t(), bits);
    return Nat::from_mpz(out);
}

bool operator==(const Nat& a, const Nat& b) {
    if (a.is_small() != b.is_small()) return false;
    if (a.is_small()) return std::get<u128>(a.rep_) == std::get<u128>(b.rep_);
    return std::get<mpz_class>(a.rep_) == std::get<mpz_class>(b.rep_);
}

std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    // Normalized: any big value exceeds every small one.
    if (a.is_small() && b.is_small()) return std::get<u128>(a.rep_) <=> std::get<u128>(b.rep_);
    if (a.is_small()) return std::strong_ordering::less;
    if (b.is_small()) return std::strong_ordering::greater;
    const int c = cmp(std::get<mpz_class>(a.rep_), std::get<mpz_class>(b.rep_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

OddNat::OddNat(Nat v) : value_(std::move(v)) {
    if (!value_.is_odd()) {
        throw std::invalid_argument("expected an odd positive integer, got " + value_.to_string());
    }
}

}  // namespace syracuse
