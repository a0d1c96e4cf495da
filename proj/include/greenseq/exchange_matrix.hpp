#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "greenseq/int_matrix.hpp"

namespace greenseq {

// A square integer matrix B together with a positive diagonal S such that SB
// is skew-symmetric. Construction certifies the pair.
class ExchangeMatrix {
public:
    // Throws Error(NotSkewSymmetrizable) when `symmetrizer` does not certify `b`.
    ExchangeMatrix(IntMatrix b, std::vector<Int> symmetrizer);

    std::size_t size() const noexcept { return b_.rows(); }
    const IntMatrix& matrix() const noexcept { return b_; }
    const std::vector<Int>& symmetrizer() const noexcept { return symmetrizer_; }
    const Int& operator()(std::size_t r, std::size_t c) const { return b_(r, c); }

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
    IntMatrix b_;
    std::vector<Int> symmetrizer_;
};

// True when every s_i >= 1 and s_i * b_ij == -s_j * b_ji for all i, j.
bool certifies(const IntMatrix& b, std::span<const Int> symmetrizer);

// Minimal symmetrizer: ratios s_j / s_i = -b_ij / b_ji are propagated along the
// nonzero pattern and each connected component is scaled to coprime positive
// integers. Throws Error(NotSkewSymmetrizable) on a sign-pattern violation or
// an inconsistent ratio around a cycle.
ExchangeMatrix find_symmetrizer(const IntMatrix& b);

// Principal submatrix on the given 1-based vertices (in the given order), with
// its canonical symmetrizer.
ExchangeMatrix principal_submatrix(const ExchangeMatrix& b, std::span<const int> vertices);

// Simultaneous row/column renumbering: entry (r, c) of the result is
// b(order[r], order[c]). `order` is a permutation of 1..n.
ExchangeMatrix relabel(const ExchangeMatrix& b, std::span<const int> order);

}  // namespace greenseq
