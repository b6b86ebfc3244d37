#pragma once

/**
 * @file series.hpp
 * @brief Formal-series reconstruction of the dilogarithm vanishing argument.
 *
 * With g(X) = X / (X - a), the rational function
 *
 *     R_n(X) = sum_{k<=n} (X/a)^k / k^2 + sum_{k<=n} g(X)^k / k^2 + sum_{k<=n} H_{k-1}/k (X/a)^k
 *
 * vanishes to order n + 1 at X = 0, and after clearing the denominator
 * a^n (X - a)^n lcm(1..n)^2 the quotient by X^{n+1} has integer coefficients.
 * Everything here is computed with exact truncated series; `a` is an integer.
 *
 * Functions taking a `const HarmonicTable&` require it to be pre-extended far
 * enough (std::out_of_range otherwise); overloads without a table build one.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmval/bigrat.hpp"
#include "harmval/harmonic.hpp"
#include "harmval/trunc_series.hpp"

namespace harmval {

/// Raised when a proven structural property of the series fails to hold.
class SeriesCheckError : public std::logic_error {
public:
    SeriesCheckError(const std::string& what, long a, std::size_t n, std::size_t index)
        : std::logic_error(what), a_(a), n_(n), index_(index) {}
    long a() const { return a_; }
    std::size_t n() const { return n_; }
    std::size_t index() const { return index_; }

private:
    long a_;
    std::size_t n_;
    std::size_t index_;
};

/// Integer coefficients of U_n; the full numerator is X^shift * U_n(X).
struct ClearedNumerator {
    std::vector<BigInt> coeffs;
    std::size_t shift = 0;

    /// Asserts every entry is an integer; SeriesCheckError names the first offender.
    static ClearedNumerator from_rational(std::span<const BigRat> coeffs, std::size_t shift, long a, std::size_t n);
};

/// Degree-`order` truncation of X / (X - a): coefficient of X^m is -a^{-m} for m >= 1.
RatSeries geometric_frac_series(long a, std::size_t order);

/// sum_{k=1}^{order} X^k / k^2.
RatSeries dilog_series(std::size_t order);

/// sum_{k=1}^{order} X^k / k, i.e. -log(1 - X).
RatSeries neg_log1m_series(std::size_t order);

/// (1/2) log^2(1 - X) from its closed coefficients H_{k-1} / k.
RatSeries half_log1m_sq_series(const HarmonicTable& h, std::size_t order);

/// (1/2) log^2(1 - X) obtained by squaring neg_log1m_series and halving.
RatSeries half_log1m_sq_by_squaring(std::size_t order);

/// R_n expanded to `order` (>= n); the three sums always run over k = 1..n.
RatSeries build_rn(long a, std::size_t n, std::size_t order, const HarmonicTable& h);
RatSeries build_rn(long a, std::size_t n, const HarmonicTable& h);
RatSeries build_rn(long a, std::size_t n);

/// True iff R_n has zero coefficients in degrees 0..n.
bool vanishing_order_check(long a, std::size_t n, const HarmonicTable& h);
bool vanishing_order_check(long a, std::size_t n);

/// First `extra_order` coefficients of U_n. Throws SeriesCheckError if the
/// cleared series fails to vanish through degree n or has a non-integer coefficient.
ClearedNumerator extract_un(long a, std::size_t n, std::size_t extra_order, const HarmonicTable& h);
ClearedNumerator extract_un(long a, std::size_t n, std::size_t extra_order = 5);

/// Li2(X) + Li2(X/(X-1)) + (1/2) log^2(1 - X) truncated at degree n is zero.
/// Composes Li2 with X/(X-1) through generic series multiplication, independently of build_rn.
bool functional_equation_check(std::size_t n, const HarmonicTable& h);
bool functional_equation_check(std::size_t n);

/// Degree-n truncation of the left-hand side above, for reporting.
RatSeries functional_equation_residual(std::size_t n, const HarmonicTable& h);

}  // namespace harmval
