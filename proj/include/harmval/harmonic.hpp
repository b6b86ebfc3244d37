#pragma once

#include <cstddef>
#include <vector>

#include "harmval/bigrat.hpp"

namespace harmval {

/// Cache of exact harmonic numbers H_0 .. H_max_index, H_0 = 0.
///
/// Extension is not synchronized. Extend up front, then share the table
/// by const reference across workers; `at()` never extends.
class HarmonicTable {
public:
    HarmonicTable() : entries_{BigRat(0)} {}

    std::size_t max_index() const { return entries_.size() - 1; }

    /// Grows the table to cover index n, checking H_k - H_{k-1} = 1/k for each new k.
    void extend_to(std::size_t n);

    /// H_n; throws std::out_of_range past max_index().
    const BigRat& at(std::size_t n) const { return entries_.at(n); }

private:
    std::vector<BigRat> entries_;
};

/// H_n, extending the table as needed.
const BigRat& harmonic(HarmonicTable& table, std::size_t n);

}  // namespace harmval
