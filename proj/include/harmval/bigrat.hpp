#pragma once

/**
 * @file bigrat.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * BigRat is always stored in lowest terms with a positive denominator,
 * so structural equality coincides with numeric equality and valuations
 * can be read off the numerator and denominator directly.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace harmval {

using BigInt = mpz_class;

class BigRat {
public:
    BigRat() = default;
    BigRat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRat(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

    /// num/den reduced to lowest terms; throws std::domain_error on den == 0.
    BigRat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        q_.get_num() = num;
        q_.get_den() = den;
        q_.canonicalize();
    }

    /// Parses "num" or "num/den" in base 10.
    static BigRat parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpz_class& num_ref() const { return q_.get_num(); }
    const mpz_class& den_ref() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "num" when the denominator is 1, otherwise "num/den".
    std::string to_string() const;

    BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
    BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
    BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.q_)); }

    BigRat inverse() const {
        if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
        return BigRat(q_.get_den(), q_.get_num());
    }

    /// Integer power; negative exponents invert.
    BigRat pow(long e) const;

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit BigRat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& r);

/// b^e for a nonnegative exponent.
BigInt ipow(const BigInt& b, unsigned long e);

/// Decimal string of an integer.
std::string to_string(const BigInt& v);

}  // namespace harmval
