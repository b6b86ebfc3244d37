#include "harmval/theorem.hpp"

#include <stdexcept>
#include <utility>

#include "harmval/parallel.hpp"

namespace harmval {

void validate_prime_and_shift(std::uint64_t p, long a) {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
    const long sp = static_cast<long>(p);
    if (a % sp == 0) {
        throw std::domain_error("a = " + std::to_string(a) + " is a multiple of p = " + std::to_string(p));
    }
    // implied by the congruence check, guarded separately since it is a divisor below
    if (sp - a == 0) throw std::domain_error("p - a must be nonzero");
}

TheoremReport make_report(std::uint64_t p, long a, std::uint64_t n, const BigRat& sum) {
    TheoremReport r;
    r.p = p;
    r.a = a;
    r.n = n;
    r.exact_valuation = valuation_p(p, sum);
    r.bound = static_cast<long>(n) + 1 - 2 * static_cast<long>(lcm_valuation(p, n));
    r.gap = r.exact_valuation - r.bound;
    r.pass = r.exact_valuation >= r.bound;
    return r;
}

CentralSumState::CentralSumState(std::uint64_t p, long a, const HarmonicTable& harmonic)
    : p_(p), a_(a), harmonic_(&harmonic) {
    validate_prime_and_shift(p, a);
}

void CentralSumState::advance() {
    const std::uint64_t k = ++n_;
    p_pow_ *= static_cast<unsigned long>(p_);
    a_pow_ *= a_;
    pa_pow_ *= static_cast<long>(p_) - a_;

    const BigInt kk(static_cast<unsigned long>(k));
    // (1/a^k + 1/(p-a)^k + k H_{k-1}/a^k) p^k / k^2
    BigRat inner = BigRat(BigInt(1), a_pow_) + BigRat(BigInt(1), pa_pow_) +
                   BigRat(kk) * harmonic_->at(k - 1) / BigRat(a_pow_);
    partial_sum_ += inner * BigRat(p_pow_, kk * kk);
}

BigRat central_sum(std::uint64_t p, long a, std::uint64_t n) {
    validate_prime_and_shift(p, a);
    if (n == 0) throw std::domain_error("central_sum: n must be >= 1");
    HarmonicTable h;
    h.extend_to(n);
    const BigRat ra(a), rpa(static_cast<long>(p) - a), rp(static_cast<long>(p));
    BigRat sum;
    for (std::uint64_t k = 1; k <= n; ++k) {
        const long e = static_cast<long>(k);
        const BigRat rk(e);
        sum += (ra.pow(-e) + rpa.pow(-e) + rk * h.at(k - 1) * ra.pow(-e)) * rp.pow(e) / (rk * rk);
    }
    return sum;
}

TheoremReport theorem1_check(std::uint64_t p, long a, std::uint64_t n) {
    return make_report(p, a, n, central_sum(p, a, n));
}

TheoremReport corollary1_check(std::uint64_t n) { return theorem1_check(2, 1, n); }

GapSummary summarize(const std::vector<TheoremReport>& reports) {
    GapSummary s;
    s.total = reports.size();
    for (const auto& r : reports) {
        if (!r.pass) ++s.failures;
        if (r.gap.is_infinite()) {
            ++s.infinite_cases;
            continue;
        }
        const long g = r.gap.value();
        if (g == 0) ++s.equality_cases;
        if (!s.min_gap || g < *s.min_gap) s.min_gap = g;
        ++s.histogram[g];
    }
    return s;
}

SweepResult sweep_theorem1(const std::vector<std::uint64_t>& primes, const std::vector<long>& a_values,
                           std::uint64_t n_max, std::size_t jobs) {
    if (n_max == 0) throw std::domain_error("sweep_theorem1: n_max must be >= 1");
    SweepResult result;
    std::vector<std::pair<std::uint64_t, long>> pairs;
    for (auto p : primes) {
        for (auto a : a_values) {
            try {
                validate_prime_and_shift(p, a);
                pairs.emplace_back(p, a);
            } catch (const std::domain_error& e) {
                result.skipped.push_back({p, a, e.what()});
            }
        }
    }

    HarmonicTable h;
    h.extend_to(n_max);
    auto per_pair = ordered_parallel_map(pairs.size(), jobs, [&](std::size_t i) {
        const auto [p, a] = pairs[i];
        CentralSumState state(p, a, h);
        std::vector<TheoremReport> out;
        out.reserve(n_max);
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            state.advance();
            out.push_back(make_report(p, a, n, state.partial_sum()));
        }
        return out;
    });

    result.reports.reserve(pairs.size() * n_max);
    for (auto& chunk : per_pair) {
        for (auto& r : chunk) result.reports.push_back(std::move(r));
    }
    result.summary = summarize(result.reports);
    return result;
}

}  // namespace harmval
