#pragma once

/**
 * @file trunc_series.hpp
 * @brief Power series truncated at a fixed order, generic over an exact scalar.
 *
 * A TruncSeries<S> of order n stands for c_0 + c_1 X + ... + c_n X^n + O(X^{n+1}).
 * Every operation produces a result of the same order and never touches a
 * coefficient past index n. Binary operations require equal orders.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "harmval/bigrat.hpp"

namespace harmval {

template <typename Scalar>
class TruncSeries {
public:
    using scalar_type = Scalar;

    /// Zero series of the given order.
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}

    /// Takes ownership of order + 1 coefficients.
    explicit TruncSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: needs at least one coefficient");
    }

    /// Polynomial `poly` (low degree first) viewed at truncation `order`; higher terms are dropped.
    static TruncSeries polynomial(std::initializer_list<Scalar> poly, std::size_t order) {
        TruncSeries out(order);
        std::size_t i = 0;
        for (const auto& c : poly) {
            if (i > order) break;
            out.coeffs_[i++] = c;
        }
        return out;
    }

    /// The monomial X^k (zero if k > order).
    static TruncSeries monomial(std::size_t k, std::size_t order) {
        TruncSeries out(order);
        if (k <= order) out.coeffs_[k] = Scalar(1);
        return out;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Scalar> coeffs() const { return coeffs_; }
    const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }
    Scalar& operator[](std::size_t i) { return coeffs_.at(i); }

    /// Index of the highest nonzero coefficient, or -1 for the zero series.
    long degree() const {
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] != 0) return static_cast<long>(i);
        }
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    /// True iff coefficients 0..d are all zero (d is clamped to the order).
    bool vanishes_through(std::size_t d) const {
        const std::size_t last = std::min(d, order());
        for (std::size_t i = 0; i <= last; ++i) {
            if (coeffs_[i] != 0) return false;
        }
        return true;
    }

    /// Same series at a lower (or equal) order.
    TruncSeries truncated(std::size_t new_order) const {
        if (new_order > order()) throw std::invalid_argument("TruncSeries: cannot raise the order of a truncated series");
        return TruncSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    TruncSeries& operator*=(const Scalar& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Scalar& s) { return a *= s; }
    friend TruncSeries operator*(const Scalar& s, TruncSeries a) { return a *= s; }
    friend TruncSeries operator-(TruncSeries a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    /// Cauchy product truncated at the common order; zero coefficients of the left factor are skipped.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        const std::size_t n = a.order();
        const long db = b.degree();
        TruncSeries out(n);
        if (db < 0) return out;
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            const std::size_t jmax = std::min(n - i, static_cast<std::size_t>(db));
            for (std::size_t j = 0; j <= jmax; ++j) {
                if (b.coeffs_[j] == 0) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    /// Multiplication by X^k, dropping what falls past the order.
    TruncSeries shifted(std::size_t k) const {
        TruncSeries out(order());
        for (std::size_t i = 0; i + k <= order(); ++i) out.coeffs_[i + k] = coeffs_[i];
        return out;
    }

    /// Division by X^k; requires coefficients 0..k-1 to vanish. The result keeps order() - k.
    TruncSeries unshifted(std::size_t k) const {
        if (k > order()) throw std::invalid_argument("TruncSeries: shift exceeds order");
        if (k > 0 && !vanishes_through(k - 1)) throw std::domain_error("TruncSeries: not divisible by X^k");
        return TruncSeries(std::vector<Scalar>(coeffs_.begin() + k, coeffs_.end()));
    }

    /// Power by repeated squaring, truncating at every multiply.
    TruncSeries pow(unsigned long e) const {
        TruncSeries result = monomial(0, order());
        TruncSeries base = *this;
        while (e) {
            if (e & 1UL) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// f / d for a divisor with a nonzero constant term (field scalars only).
    TruncSeries divided_by(const TruncSeries& d) const
        requires std::is_same_v<Scalar, BigRat>
    {
        check_order(d);
        if (d.coeffs_[0] == 0) throw std::domain_error("TruncSeries: divisor has zero constant term");
        const std::size_t n = order();
        const std::size_t dd = static_cast<std::size_t>(d.degree());
        const Scalar inv0 = d.coeffs_[0].inverse();
        TruncSeries out(n);
        for (std::size_t m = 0; m <= n; ++m) {
            Scalar acc = coeffs_[m];
            for (std::size_t j = 1; j <= std::min(m, dd); ++j) {
                if (d.coeffs_[j] != 0) acc -= d.coeffs_[j] * out.coeffs_[m - j];
            }
            out.coeffs_[m] = acc * inv0;
        }
        return out;
    }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    void check_order(const TruncSeries& o) const {
        if (o.order() != order()) {
            throw std::invalid_argument("TruncSeries: order mismatch (" + std::to_string(order()) + " vs " +
                                        std::to_string(o.order()) + ")");
        }
    }

    std::vector<Scalar> coeffs_;
};

using RatSeries = TruncSeries<BigRat>;
using IntSeries = TruncSeries<BigInt>;

/// Exact conversion of an integer series to a rational one.
inline RatSeries to_rational(const IntSeries& s) {
    std::vector<BigRat> c;
    c.reserve(s.order() + 1);
    for (const auto& x : s.coeffs()) c.emplace_back(x);
    return RatSeries(std::move(c));
}

}  // namespace harmval
