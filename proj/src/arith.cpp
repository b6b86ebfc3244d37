#include "harmval/arith.hpp"

#include <array>
#include <stdexcept>

namespace harmval {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
}

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) throw std::domain_error(std::string(what) + ": n must be >= 1");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    // First twelve primes form a deterministic witness set below 3.3e24.
    constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto w : witnesses) {
        if (n % w == 0) return n == w;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto w : witnesses) {
        std::uint64_t x = pow_mod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

long valuation_p(std::uint64_t p, const BigInt& x) {
    require_prime(p);
    if (x == 0) throw std::domain_error("valuation_p: integer valuation of zero");
    BigInt rest;
    const BigInt prime(static_cast<unsigned long>(p));
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

Valuation valuation_p(std::uint64_t p, const BigRat& r) {
    require_prime(p);
    if (r.is_zero()) return Valuation::infinite();
    return Valuation::finite(valuation_p(p, r.num_ref()) - valuation_p(p, r.den_ref()));
}

std::uint64_t digit_sum_p(std::uint64_t p, std::uint64_t n) {
    require_prime(p);
    require_positive(n, "digit_sum_p");
    std::uint64_t s = 0;
    for (; n; n /= p) s += n % p;
    return s;
}

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n) {
    const std::uint64_t s = digit_sum_p(p, n);
    if ((n - s) % (p - 1) != 0) {
        throw std::logic_error("legendre_valuation: (p - 1) does not divide n - s_p(n)");
    }
    return (n - s) / (p - 1);
}

std::uint64_t lcm_valuation(std::uint64_t p, std::uint64_t n) {
    require_prime(p);
    require_positive(n, "lcm_valuation");
    std::uint64_t k = 0;
    // largest k with p^k <= n; pk * p <= n  <=>  pk <= n / p
    for (std::uint64_t pk = 1; pk <= n / p; pk *= p) ++k;
    return k;
}

BigInt double_factorial_odd(std::uint64_t n) {
    require_positive(n, "double_factorial_odd");
    BigInt out = 1;
    for (std::uint64_t k = 1; k < 2 * n; k += 2) out *= static_cast<unsigned long>(k);
    return out;
}

BigInt factorial(std::uint64_t n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt lcm_upto(std::uint64_t n) {
    BigInt out = 1;
    for (std::uint64_t k = 2; k <= n; ++k) {
        mpz_lcm_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return out;
}

}  // namespace harmval
