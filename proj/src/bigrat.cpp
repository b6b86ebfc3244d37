#include "harmval/bigrat.hpp"

#include <ostream>

namespace harmval {

BigRat BigRat::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return BigRat(BigInt(std::string(text), 10));
        return BigRat(BigInt(std::string(text.substr(0, slash)), 10),
                      BigInt(std::string(text.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("BigRat: cannot parse '" + std::string(text) + "'");
    }
}

std::string BigRat::to_string() const {
    if (is_integer()) return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

BigRat BigRat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    // coprime inputs stay coprime under powers
    mpq_class out;
    out.get_num() = std::move(n);
    out.get_den() = std::move(d);
    return BigRat(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.to_string(); }

BigInt ipow(const BigInt& b, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

}  // namespace harmval
