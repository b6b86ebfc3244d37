#include "harmval/sequences.hpp"

#include <bit>

#include "harmval/arith.hpp"
#include "harmval/parallel.hpp"

namespace harmval {
namespace {

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) throw std::domain_error(std::string(what) + ": n must be >= 1");
}

BigInt pow2(std::uint64_t e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

BigRat ratio(std::uint64_t num, std::uint64_t den) {
    return BigRat(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)));
}

// sum_{k=1}^{n} (2 + k H_{k-1}) 2^k / k^2
BigRat u_inner_sum(std::uint64_t n, const HarmonicTable& h) {
    BigRat sum;
    BigInt two_k = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
        two_k *= 2;
        const BigInt kk(static_cast<unsigned long>(k));
        sum += (BigRat(2) + BigRat(kk) * h.at(k - 1)) * BigRat(two_k, kk * kk);
    }
    return sum;
}

HarmonicTable table_to(std::uint64_t n) {
    HarmonicTable h;
    h.extend_to(n);
    return h;
}

}  // namespace

std::string to_string(Route r) {
    switch (r) {
        case Route::Direct: return "direct";
        case Route::Recurrence: return "recurrence";
        case Route::Identity: return "identity";
    }
    return "unknown";
}

SequencePoint SequencePoint::make(std::uint64_t n, BigRat value, Route route) {
    SequencePoint p;
    p.n = n;
    p.is_integer = value.is_integer();
    p.value = std::move(value);
    p.route = route;
    return p;
}

bool in_exceptional_set(std::uint64_t n) { return n == 3 || n == 5 || n == 7; }

SequencePoint u_direct(std::uint64_t n, const HarmonicTable& h) {
    require_positive(n, "u_direct");
    const BigInt f = factorial(n);
    const BigRat prefactor(f * f, pow2(2 * n));
    return SequencePoint::make(n, prefactor * u_inner_sum(n, h), Route::Direct);
}

SequencePoint u_direct(std::uint64_t n) { return u_direct(n, table_to(n)); }

std::vector<SequencePoint> u_recurrence_sequence(std::uint64_t n_max, const HarmonicTable& h) {
    std::vector<SequencePoint> out;
    out.reserve(n_max + 1);
    out.push_back(SequencePoint::make(0, BigRat(0), Route::Recurrence));
    BigRat u;
    BigInt fact_prev = 1;  // (n-1)!
    BigInt two_n = 1;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        two_n *= 2;
        const BigRat nr(static_cast<long>(n));
        u = ratio(n * n, 4) * u +
            BigRat(fact_prev * fact_prev, two_n) * (BigRat(2) + nr * h.at(n - 1));
        out.push_back(SequencePoint::make(n, u, Route::Recurrence));
        fact_prev *= static_cast<unsigned long>(n);
    }
    return out;
}

SequencePoint u_recurrence(std::uint64_t n) {
    return std::move(u_recurrence_sequence(n, table_to(n)).back());
}

SequencePoint v_direct(std::uint64_t n, const HarmonicTable& h) {
    require_positive(n, "v_direct");
    BigRat sum;
    for (std::uint64_t k = 1; k <= n; ++k) {
        const std::uint64_t m = n + k;
        const BigInt mm(static_cast<unsigned long>(m));
        const BigRat top = BigRat(2) + BigRat(mm) * h.at(m - 1);
        sum += top / BigRat(BigInt(mm * mm * pow2(n - k)));
    }
    const BigInt f = factorial(2 * n);
    return SequencePoint::make(n, BigRat(f * f, pow2(2 * n)) * sum, Route::Direct);
}

SequencePoint v_direct(std::uint64_t n) { return v_direct(n, table_to(2 * n)); }

SequencePoint v_identity(std::uint64_t n, const HarmonicTable& h) {
    require_positive(n, "v_identity");
    const BigInt d = double_factorial_odd(n);
    const BigRat value = u_direct(2 * n, h).value - BigRat(BigInt(d * d)) * u_direct(n, h).value;
    return SequencePoint::make(n, value, Route::Identity);
}

SequencePoint v_identity(std::uint64_t n) { return v_identity(n, table_to(2 * n)); }

BigRat k_defect_from(std::uint64_t n, const BigRat& v_n, const BigRat& v_prev) {
    require_positive(n, "k_defect");
    const std::uint64_t odd = 2 * n - 1;
    return v_n - ratio(n * n * odd * odd, 4) * v_prev;
}

BigRat k_defect(std::uint64_t n, const HarmonicTable& h) {
    const BigRat v_prev = n == 1 ? BigRat(0) : v_direct(n - 1, h).value;
    return k_defect_from(n, v_direct(n, h).value, v_prev);
}

BigRat k_defect(std::uint64_t n) { return k_defect(n, table_to(2 * n)); }

Theorem2Result theorem2_check(std::uint64_t n, const HarmonicTable& h) {
    Theorem2Result r;
    r.point = u_direct(n, h);
    r.exceptional = in_exceptional_set(n);
    if (r.exceptional) {
        r.pass = !r.point.is_integer;
        return r;
    }
    r.pass = r.point.is_integer && r.point.value.sign() > 0;
    if (n >= 8) {
        ProofChain c;
        c.valuation_u = valuation_p(2, r.point.value).value();
        const long theta_s = valuation_p(2, u_inner_sum(n, h)).value();
        const long ln = static_cast<long>(n);
        c.legendre_side = 2 * static_cast<long>(legendre_valuation(2, n)) - 2 * ln + theta_s;
        c.lower_bound = ln + 1 - 2 * static_cast<long>(digit_sum_p(2, n) + lcm_valuation(2, n));
        c.holds = c.valuation_u == c.legendre_side && c.legendre_side >= c.lower_bound && c.lower_bound >= 0;
        r.pass = r.pass && c.holds;
        r.chain = c;
    }
    return r;
}

Theorem2Result theorem2_check(std::uint64_t n) { return theorem2_check(n, table_to(n)); }

Lemma1Record lemma1_record(std::uint64_t n) {
    require_positive(n, "lemma1_record");
    Lemma1Record r;
    r.n = n;
    r.lhs = static_cast<std::uint64_t>(std::popcount(n)) + static_cast<std::uint64_t>(std::bit_width(n) - 1);
    r.rhs_doubled = n + 1;
    r.holds = 2 * r.lhs <= r.rhs_doubled;
    return r;
}

Lemma1Violation::Lemma1Violation(const Lemma1Record& r)
    : std::logic_error("inequality fails at n = " + std::to_string(r.n) + ": 2 * " + std::to_string(r.lhs) +
                       " > " + std::to_string(r.rhs_doubled)),
      record_(r) {}

std::vector<Lemma1Record> lemma1_scan(std::uint64_t n_max, std::size_t jobs) {
    require_positive(n_max, "lemma1_scan");
    constexpr std::uint64_t chunk = 1 << 16;
    const std::size_t chunks = static_cast<std::size_t>((n_max + chunk - 1) / chunk);
    auto parts = ordered_parallel_map(chunks, jobs, [&](std::size_t c) {
        const std::uint64_t lo = 1 + c * chunk;
        const std::uint64_t hi = std::min<std::uint64_t>(n_max, lo + chunk - 1);
        std::vector<Lemma1Record> out;
        out.reserve(hi - lo + 1);
        for (std::uint64_t n = lo; n <= hi; ++n) out.push_back(lemma1_record(n));
        return out;
    });
    std::vector<Lemma1Record> records;
    records.reserve(n_max);
    for (auto& part : parts) records.insert(records.end(), part.begin(), part.end());
    for (const auto& r : records) {
        if (r.n >= 8 && !r.holds) throw Lemma1Violation(r);
    }
    return records;
}

}  // namespace harmval
