#include "harmval/series.hpp"

#include "harmval/arith.hpp"

namespace harmval {
namespace {

void require_nonzero(long a) {
    if (a == 0) throw std::domain_error("a must be nonzero");
}

void require_positive(std::size_t n) {
    if (n == 0) throw std::domain_error("n must be >= 1");
}

BigRat unit_fraction(const BigInt& d) { return BigRat(BigInt(1), d); }

// Horner evaluation of sum_{k=1}^{count} c[k-1] * g^k, where `times_g` multiplies by g.
template <typename TimesG>
RatSeries sum_of_powers(const std::vector<BigRat>& c, std::size_t order, TimesG times_g) {
    RatSeries acc(order);
    for (std::size_t k = c.size(); k-- > 0;) {
        acc[0] += c[k];
        acc = times_g(acc);
    }
    return acc;
}

std::vector<BigRat> inverse_squares(std::size_t n) {
    std::vector<BigRat> c;
    c.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const BigInt kk(static_cast<unsigned long>(k));
        c.push_back(unit_fraction(kk * kk));
    }
    return c;
}

}  // namespace

ClearedNumerator ClearedNumerator::from_rational(std::span<const BigRat> coeffs, std::size_t shift, long a,
                                                 std::size_t n) {
    ClearedNumerator out;
    out.shift = shift;
    out.coeffs.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_integer()) {
            throw SeriesCheckError("U_n coefficient " + std::to_string(i) + " is not an integer: " +
                                       coeffs[i].to_string(),
                                   a, n, i);
        }
        out.coeffs.push_back(coeffs[i].num());
    }
    return out;
}

RatSeries geometric_frac_series(long a, std::size_t order) {
    require_nonzero(a);
    const BigRat inv_a = BigRat(a).inverse();
    RatSeries out(order);
    BigRat power = -inv_a;
    for (std::size_t m = 1; m <= order; ++m) {
        out[m] = power;
        power *= inv_a;
    }
    return out;
}

RatSeries dilog_series(std::size_t order) {
    RatSeries out(order);
    const auto c = inverse_squares(order);
    for (std::size_t k = 1; k <= order; ++k) out[k] = c[k - 1];
    return out;
}

RatSeries neg_log1m_series(std::size_t order) {
    RatSeries out(order);
    for (std::size_t k = 1; k <= order; ++k) out[k] = unit_fraction(BigInt(static_cast<unsigned long>(k)));
    return out;
}

RatSeries half_log1m_sq_series(const HarmonicTable& h, std::size_t order) {
    RatSeries out(order);
    for (std::size_t k = 1; k <= order; ++k) {
        out[k] = h.at(k - 1) * unit_fraction(BigInt(static_cast<unsigned long>(k)));
    }
    return out;
}

RatSeries half_log1m_sq_by_squaring(std::size_t order) {
    const RatSeries l = neg_log1m_series(order);
    return (l * l) * BigRat(BigInt(1), BigInt(2));
}

RatSeries build_rn(long a, std::size_t n, std::size_t order, const HarmonicTable& h) {
    require_nonzero(a);
    require_positive(n);
    if (order < n) throw std::invalid_argument("build_rn: order must be >= n");

    // Sums in X/a: coefficient of X^k is (1/k^2 + H_{k-1}/k) / a^k.
    RatSeries out(order);
    const BigRat inv_a = BigRat(a).inverse();
    BigRat inv_a_pow = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        inv_a_pow *= inv_a;
        const BigInt kk(static_cast<unsigned long>(k));
        out[k] = (unit_fraction(kk * kk) + h.at(k - 1) * unit_fraction(kk)) * inv_a_pow;
    }

    // sum g^k / k^2 with g = X / (X - a); multiplying by g is a shift then a division by (X - a).
    const RatSeries x_minus_a = RatSeries::polynomial({BigRat(-a), BigRat(1)}, order);
    out += sum_of_powers(inverse_squares(n), order,
                         [&](const RatSeries& s) { return s.shifted(1).divided_by(x_minus_a); });
    return out;
}

RatSeries build_rn(long a, std::size_t n, const HarmonicTable& h) { return build_rn(a, n, n, h); }

RatSeries build_rn(long a, std::size_t n) {
    HarmonicTable h;
    h.extend_to(n);
    return build_rn(a, n, h);
}

bool vanishing_order_check(long a, std::size_t n, const HarmonicTable& h) {
    return build_rn(a, n, h).vanishes_through(n);
}

bool vanishing_order_check(long a, std::size_t n) {
    HarmonicTable h;
    h.extend_to(n);
    return vanishing_order_check(a, n, h);
}

ClearedNumerator extract_un(long a, std::size_t n, std::size_t extra_order, const HarmonicTable& h) {
    if (extra_order == 0) throw std::invalid_argument("extract_un: extra_order must be >= 1");
    const std::size_t order = n + extra_order;
    const RatSeries rn = build_rn(a, n, order, h);

    // a^n lcm(1..n)^2 (X - a)^n, exact as a polynomial of degree n <= order.
    const IntSeries x_minus_a = IntSeries::polynomial({BigInt(-a), BigInt(1)}, order);
    const BigInt lcm = lcm_upto(n);
    const BigInt scale = ipow(BigInt(a), n) * lcm * lcm;
    const RatSeries cleared = (rn * to_rational(x_minus_a.pow(n))) * BigRat(scale);

    for (std::size_t i = 0; i <= n; ++i) {
        if (!cleared[i].is_zero()) {
            throw SeriesCheckError("cleared R_n has nonzero coefficient at degree " + std::to_string(i), a, n, i);
        }
    }
    const RatSeries un = cleared.unshifted(n + 1);
    return ClearedNumerator::from_rational(un.coeffs(), n + 1, a, n);
}

ClearedNumerator extract_un(long a, std::size_t n, std::size_t extra_order) {
    HarmonicTable h;
    h.extend_to(n);
    return extract_un(a, n, extra_order, h);
}

RatSeries functional_equation_residual(std::size_t n, const HarmonicTable& h) {
    require_positive(n);
    const RatSeries g = geometric_frac_series(1, n);
    RatSeries out = dilog_series(n);
    out += sum_of_powers(inverse_squares(n), n, [&](const RatSeries& s) { return s * g; });
    out += half_log1m_sq_series(h, n);
    return out;
}

bool functional_equation_check(std::size_t n, const HarmonicTable& h) {
    return functional_equation_residual(n, h).is_zero();
}

bool functional_equation_check(std::size_t n) {
    HarmonicTable h;
    h.extend_to(n);
    return functional_equation_check(n, h);
}

}  // namespace harmval
