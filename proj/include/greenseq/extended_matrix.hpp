#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "greenseq/exchange_matrix.hpp"

namespace greenseq {

// Mutation directions in application order, 1-based: (k1, ..., ks) means
// mu_k1 is applied first.
class MutationSequence {
public:
    MutationSequence() = default;
    MutationSequence(std::initializer_list<int> indices);
    explicit MutationSequence(std::vector<int> indices);

    // "2,3,1,2" (whitespace tolerated, empty string is the empty sequence).
    static MutationSequence parse(std::string_view text);

    const std::vector<int>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    int operator[](std::size_t i) const { return indices_[i]; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    void push_back(int k);
    void pop_back() { indices_.pop_back(); }
    MutationSequence shifted(int offset) const;
    MutationSequence concat(const MutationSequence& tail) const;

    // Throws Error(IndexOutOfRange) unless every index is in 1..n.
    void check_range(std::size_t n) const;

    std::string to_string() const;

    friend bool operator==(const MutationSequence&, const MutationSequence&) = default;

private:
    std::vector<int> indices_;
};

// An (m+n) x n matrix whose top n x n block (the principal part) is
// skew-symmetrizable with the stored symmetrizer. Immutable; mutation returns
// a new value.
class ExtendedMatrix {
public:
    ExtendedMatrix(IntMatrix data, std::vector<Int> symmetrizer);

    std::size_t n() const noexcept { return data_.cols(); }
    std::size_t m() const noexcept { return data_.rows() - data_.cols(); }
    const IntMatrix& data() const noexcept { return data_; }
    const std::vector<Int>& symmetrizer() const noexcept { return symmetrizer_; }

    IntMatrix principal() const { return data_.row_block(0, n()); }
    IntMatrix attached() const { return data_.row_block(n(), m()); }
    ExchangeMatrix exchange_matrix() const;

    friend bool operator==(const ExtendedMatrix&, const ExtendedMatrix&) = default;

private:
    struct Trusted {};
    ExtendedMatrix(Trusted, IntMatrix data, std::vector<Int> symmetrizer)
        : data_(std::move(data)), symmetrizer_(std::move(symmetrizer)) {}
    friend ExtendedMatrix mutate(const ExtendedMatrix&, int);

    IntMatrix data_;
    std::vector<Int> symmetrizer_;
};

// [B; I_n]
ExtendedMatrix frame(const ExchangeMatrix& b);
// [B; attached]
ExtendedMatrix stack(const ExchangeMatrix& b, const IntMatrix& attached);

// Mutation in direction k (1-based) of the whole extended matrix.
ExtendedMatrix mutate(const ExtendedMatrix& m, int k);
ExtendedMatrix mutate_sequence(const ExtendedMatrix& m, const MutationSequence& seq);

// The mutation rule on raw entries, for any matrix with at least k+1 rows and
// columns. k is zero-based; overflow throws Error(ArithmeticOverflow).
IntMatrix mutate_entries(const IntMatrix& m, std::size_t k);

}  // namespace greenseq
