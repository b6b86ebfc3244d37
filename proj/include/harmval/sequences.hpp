#pragma once

/**
 * @file sequences.hpp
 * @brief The rational sequences u_n, v_n and K_n, each computed along independent routes.
 *
 *     u_n = n!^2 / 4^n * sum_{k=1}^{n} (2 + k H_{k-1}) 2^k / k^2
 *     v_n = (2n)!^2 / 4^n * sum_{k=1}^{n} (2 + (n+k) H_{n+k-1}) / ((n+k)^2 2^{n-k})
 *         = u_{2n} - ((2n-1)!!)^2 u_n
 *     K_n = v_n - n^2 (2n-1)^2 / 4 * v_{n-1},   v_0 = 0
 *
 * u_n and v_n are positive integers outside the exceptional set {3, 5, 7}.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmval/bigrat.hpp"
#include "harmval/harmonic.hpp"

namespace harmval {

enum class Route { Direct, Recurrence, Identity };

std::string to_string(Route r);

struct SequencePoint {
    std::uint64_t n = 0;
    BigRat value;
    bool is_integer = true;
    Route route = Route::Direct;

    static SequencePoint make(std::uint64_t n, BigRat value, Route route);
};

/// n in {3, 5, 7}.
bool in_exceptional_set(std::uint64_t n);

/// Tables below must cover H_n for u (H_{2n-1} for v); overloads without a table build one.
SequencePoint u_direct(std::uint64_t n, const HarmonicTable& h);
SequencePoint u_direct(std::uint64_t n);

/// u_0 .. u_{n_max} by u_n = (n^2/4) u_{n-1} + ((n-1)!^2 / 2^n)(2 + n H_{n-1}), u_0 = 0.
std::vector<SequencePoint> u_recurrence_sequence(std::uint64_t n_max, const HarmonicTable& h);
SequencePoint u_recurrence(std::uint64_t n);

SequencePoint v_direct(std::uint64_t n, const HarmonicTable& h);
SequencePoint v_direct(std::uint64_t n);

/// u_{2n} - ((2n-1)!!)^2 u_n.
SequencePoint v_identity(std::uint64_t n, const HarmonicTable& h);
SequencePoint v_identity(std::uint64_t n);

/// K_n from v_n and v_{n-1}.
BigRat k_defect_from(std::uint64_t n, const BigRat& v_n, const BigRat& v_prev);

/// K_n with v_n from v_direct (v_0 = 0).
BigRat k_defect(std::uint64_t n, const HarmonicTable& h);
BigRat k_defect(std::uint64_t n);

/// Terms of the proof chain for n >= 8:
/// theta_2(u_n) = 2 theta_2(n!) - 2n + theta_2(S) >= n + 1 - 2(s_2(n) + floor(log_2 n)) >= 0.
struct ProofChain {
    long valuation_u = 0;      ///< theta_2(u_n), computed directly
    long legendre_side = 0;    ///< 2 theta_2(n!) - 2n + theta_2(S)
    long lower_bound = 0;      ///< n + 1 - 2(s_2(n) + floor(log_2 n))
    bool holds = false;
};

struct Theorem2Result {
    SequencePoint point;
    bool exceptional = false;
    std::optional<ProofChain> chain;  ///< only for n >= 8
    bool pass = false;
};

/// Outside {3,5,7}: pass iff u_n is a positive integer (and the chain holds for n >= 8).
/// Inside {3,5,7}: pass iff u_n is not an integer.
Theorem2Result theorem2_check(std::uint64_t n, const HarmonicTable& h);
Theorem2Result theorem2_check(std::uint64_t n);

struct Lemma1Record {
    std::uint64_t n = 0;
    std::uint64_t lhs = 0;          ///< s_2(n) + floor(log_2 n)
    std::uint64_t rhs_doubled = 0;  ///< n + 1
    bool holds = false;             ///< 2 lhs <= n + 1
};

Lemma1Record lemma1_record(std::uint64_t n);

class Lemma1Violation : public std::logic_error {
public:
    explicit Lemma1Violation(const Lemma1Record& r);
    const Lemma1Record& record() const { return record_; }

private:
    Lemma1Record record_;
};

/// Records for n = 1..n_max, scanned in chunks over `jobs` workers. Throws
/// Lemma1Violation for the smallest n >= 8 where the inequality fails.
std::vector<Lemma1Record> lemma1_scan(std::uint64_t n_max, std::size_t jobs = 1);

}  // namespace harmval
