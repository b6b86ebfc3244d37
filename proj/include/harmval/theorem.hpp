#pragma once

/**
 * @file theorem.hpp
 * @brief Exact central sums S(p, a, n) and the lower bound on their p-adic valuation.
 *
 *     S(p, a, n) = sum_{k=1}^{n} (1/a^k + 1/(p-a)^k + k H_{k-1}/a^k) p^k / k^2
 *     theta_p(S(p, a, n)) >= n + 1 - 2 floor(log_p n)     for p prime, p not dividing a.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harmval/arith.hpp"
#include "harmval/bigrat.hpp"
#include "harmval/harmonic.hpp"

namespace harmval {

struct TheoremReport {
    std::uint64_t p = 0;
    long a = 0;
    std::uint64_t n = 0;
    Valuation exact_valuation = Valuation::infinite();
    long bound = 0;
    Valuation gap = Valuation::infinite();  ///< exact_valuation - bound
    bool pass = false;
};

/// Builds the report for a known sum value; `pass` is exact >= bound (infinity passes).
TheoremReport make_report(std::uint64_t p, long a, std::uint64_t n, const BigRat& sum);

/// Throws std::domain_error unless p is prime, p does not divide a, and p != a.
void validate_prime_and_shift(std::uint64_t p, long a);

/// Running S(p, a, n). Powers of p, a and p - a are updated in place, so each
/// advance() costs a constant number of big-number products plus one addition.
/// The harmonic table must outlive the state and cover every index it will reach.
class CentralSumState {
public:
    CentralSumState(std::uint64_t p, long a, const HarmonicTable& harmonic);

    /// n -> n + 1.
    void advance();

    std::uint64_t p() const { return p_; }
    long a() const { return a_; }
    std::uint64_t n() const { return n_; }
    const BigRat& partial_sum() const { return partial_sum_; }

private:
    std::uint64_t p_;
    long a_;
    std::uint64_t n_ = 0;
    BigRat partial_sum_;
    BigInt p_pow_ = 1;
    BigInt a_pow_ = 1;
    BigInt pa_pow_ = 1;
    const HarmonicTable* harmonic_;
};

/// S(p, a, n) summed from scratch.
BigRat central_sum(std::uint64_t p, long a, std::uint64_t n);

TheoremReport theorem1_check(std::uint64_t p, long a, std::uint64_t n);

/// theorem1_check(2, 1, n).
TheoremReport corollary1_check(std::uint64_t n);

struct GapSummary {
    std::size_t total = 0;
    std::size_t failures = 0;
    std::size_t equality_cases = 0;   ///< finite gap == 0
    std::size_t infinite_cases = 0;   ///< S == 0
    std::optional<long> min_gap;      ///< over finite gaps
    std::map<long, std::size_t> histogram;
};

struct SkippedPair {
    std::uint64_t p;
    long a;
    std::string reason;
};

struct SweepResult {
    std::vector<TheoremReport> reports;  ///< sorted by (p, a, n)
    std::vector<SkippedPair> skipped;
    GapSummary summary;

    bool all_pass() const { return summary.failures == 0; }
};

GapSummary summarize(const std::vector<TheoremReport>& reports);

/// Reports for every valid (p, a) pair and n = 1..n_max, one incremental
/// state per pair, pairs distributed over `jobs` workers. Pairs with p | a are
/// skipped and listed. Output order is (p in given order, a in given order, n).
SweepResult sweep_theorem1(const std::vector<std::uint64_t>& primes, const std::vector<long>& a_values,
                           std::uint64_t n_max, std::size_t jobs = 1);

}  // namespace harmval
