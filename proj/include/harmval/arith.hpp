#pragma once

/**
 * @file arith.hpp
 * @brief p-adic valuations and the elementary counting functions built on them.
 *
 * All functions are pure. Primality of `p` is checked on entry with a
 * deterministic Miller-Rabin test; a composite `p` raises std::domain_error.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "harmval/bigrat.hpp"

namespace harmval {

/// Value of a p-adic valuation: a finite integer, or +infinity for zero.
class Valuation {
public:
    static Valuation finite(long v) { return Valuation(v); }
    static Valuation infinite() { return Valuation(); }

    bool is_infinite() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }

    /// Throws std::logic_error on an infinite valuation.
    long value() const {
        if (!value_) throw std::logic_error("Valuation: value() of infinite valuation");
        return *value_;
    }

    /// Shift by a finite amount; infinity absorbs.
    Valuation operator+(long k) const { return value_ ? finite(*value_ + k) : infinite(); }
    Valuation operator-(long k) const { return *this + (-k); }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() == b.is_infinite() ? std::strong_ordering::equal
                   : a.is_infinite()                  ? std::strong_ordering::greater
                                                      : std::strong_ordering::less;
        }
        return *a.value_ <=> *b.value_;
    }
    friend bool operator==(const Valuation& a, long b) { return a.value_ && *a.value_ == b; }
    friend std::strong_ordering operator<=>(const Valuation& a, long b) {
        return a <=> finite(b);
    }

    /// "inf" or the decimal value.
    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

private:
    Valuation() = default;
    explicit Valuation(long v) : value_(v) {}
    std::optional<long> value_;
};

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Exponent of p in a nonzero integer.
long valuation_p(std::uint64_t p, const BigInt& x);

/// theta_p(r); Infinite iff r == 0.
Valuation valuation_p(std::uint64_t p, const BigRat& r);

/// Sum of the base-p digits of n (n >= 1).
std::uint64_t digit_sum_p(std::uint64_t p, std::uint64_t n);

/// theta_p(n!) = (n - s_p(n)) / (p - 1).
std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n);

/// theta_p(lcm(1..n)) = floor(log_p n), by integer power comparison.
std::uint64_t lcm_valuation(std::uint64_t p, std::uint64_t n);

/// 1 * 3 * 5 * ... * (2n - 1).
BigInt double_factorial_odd(std::uint64_t n);

BigInt factorial(std::uint64_t n);

/// lcm(1, 2, ..., n).
BigInt lcm_upto(std::uint64_t n);

}  // namespace harmval
