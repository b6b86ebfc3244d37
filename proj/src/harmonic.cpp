#include "harmval/harmonic.hpp"

#include <stdexcept>
#include <string>

namespace harmval {

void HarmonicTable::extend_to(std::size_t n) {
    entries_.reserve(n + 1);
    while (entries_.size() <= n) {
        const std::size_t k = entries_.size();
        const BigRat step(BigInt(1), BigInt(static_cast<unsigned long>(k)));
        entries_.push_back(entries_.back() + step);
        if (entries_[k] - entries_[k - 1] != step) {
            throw std::logic_error("HarmonicTable: telescoping check failed at k = " + std::to_string(k));
        }
    }
}

const BigRat& harmonic(HarmonicTable& table, std::size_t n) {
    table.extend_to(n);
    return table.at(n);
}

}  // namespace harmval
