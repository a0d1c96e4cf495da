#include "greenseq/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace greenseq {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::ShapeMismatch, "ragged initializer list for IntMatrix");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(r + 1) + " has " +
                                                      std::to_string(rows[r].size()) + " entries, expected " +
                                                      std::to_string(m.cols_));
        }
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
    }
    return m;
}

Int& IntMatrix::at(std::size_t r, std::size_t c) {
    return const_cast<Int&>(std::as_const(*this).at(r, c));
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw Error(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                                    ") outside " + std::to_string(rows_) + "x" +
                                                    std::to_string(cols_) + " matrix");
    }
    return (*this)(r, c);
}

std::span<const Int> IntMatrix::row(std::size_t r) const {
    return std::span<const Int>(entries_).subspan(r * cols_, cols_);
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
    IntMatrix out(count, cols_);
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, out.entries_.begin());
    return out;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = at(rows[r], cols[c]);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
    std::vector<std::vector<Int>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(a(i, l), b(l, j)));
        }
    return out;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols() != bottom.cols() && !top.empty() && !bottom.empty()) {
        throw Error(ErrorKind::ShapeMismatch, "vstack: column counts differ (" + std::to_string(top.cols()) +
                                                  " vs " + std::to_string(bottom.cols()) + ")");
    }
    const std::size_t cols = top.empty() ? bottom.cols() : top.cols();
    IntMatrix out(top.rows() + bottom.rows(), cols);
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out(top.rows() + r, c) = bottom(r, c);
    return out;
}

bool is_nonnegative(const IntMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](const Int& x) { return x >= 0; });
}

bool is_nonpositive(const IntMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](const Int& x) { return x <= 0; });
}

bool is_zero(const IntMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](const Int& x) { return x == 0; });
}

std::size_t exact_rank(const IntMatrix& input) {
    // Bareiss: after step k every entry of the trailing block is a (k+1)-minor,
    // so the division by the previous pivot is exact.
    IntMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    Int prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(pivot, c), a(rank, c));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                Int num = checked_sub(checked_mul(a(rank, col), a(r, c)), checked_mul(a(r, col), a(rank, c)));
                a(r, c) = exact_div(num, prev_pivot);
            }
            a(r, col) = 0;
        }
        prev_pivot = a(rank, col);
        ++rank;
    }
    return rank;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << to_string(m(r, c));
        out << ']';
    }
    out << ']';
    return out.str();
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ (m.rows() * 31 + m.cols());
    for (const Int& x : m.entries()) {
        h ^= hash_int(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace greenseq
