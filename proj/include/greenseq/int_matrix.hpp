#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "greenseq/integer.hpp"

namespace greenseq {

// Dense row-major integer matrix. Element access through operator() is
// unchecked and zero-based; at() checks bounds.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Int& at(std::size_t r, std::size_t c);
    const Int& at(std::size_t r, std::size_t c) const;

    std::span<const Int> entries() const noexcept { return entries_; }
    std::span<const Int> row(std::size_t r) const;

    // Rows [first, first + count) with all columns.
    IntMatrix row_block(std::size_t first, std::size_t count) const;
    // Submatrix with the given zero-based row and column indices.
    IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
    IntMatrix transposed() const;

    std::vector<std::vector<Int>> to_rows() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
// [top; bottom], both with the same column count.
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
bool is_nonnegative(const IntMatrix& m);
bool is_nonpositive(const IntMatrix& m);
bool is_zero(const IntMatrix& m);

// Rank over the rationals via fraction-free (Bareiss) elimination.
std::size_t exact_rank(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix& m) const noexcept;
};

}  // namespace greenseq
