#include "greenseq/extended_matrix.hpp"

#include <cctype>
#include <charconv>

namespace greenseq {

MutationSequence::MutationSequence(std::initializer_list<int> indices) : MutationSequence(std::vector<int>(indices)) {}

MutationSequence::MutationSequence(std::vector<int> indices) : indices_(std::move(indices)) {
    for (int k : indices_) {
        if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "mutation index " + std::to_string(k) + " is below 1");
    }
}

MutationSequence MutationSequence::parse(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (pos == text.size()) return {};
    while (true) {
        skip_space();
        int value = 0;
        const char* first = text.data() + pos;
        const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == first) {
            throw ParseError("expected a mutation index in \"" + std::string(text) + "\"", 1, pos + 1);
        }
        if (value < 1) throw ParseError("mutation indices are 1-based", 1, pos + 1);
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        skip_space();
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' between mutation indices", 1, pos + 1);
        ++pos;
    }
    return MutationSequence(std::move(out));
}

void MutationSequence::push_back(int k) {
    if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "mutation index " + std::to_string(k) + " is below 1");
    indices_.push_back(k);
}

MutationSequence MutationSequence::shifted(int offset) const {
    std::vector<int> out(indices_);
    for (int& k : out) k += offset;
    return MutationSequence(std::move(out));
}

MutationSequence MutationSequence::concat(const MutationSequence& tail) const {
    std::vector<int> out(indices_);
    out.insert(out.end(), tail.indices_.begin(), tail.indices_.end());
    return MutationSequence(std::move(out));
}

void MutationSequence::check_range(std::size_t n) const {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (static_cast<std::size_t>(indices_[i]) > n) {
            throw Error(ErrorKind::IndexOutOfRange, "mutation index " + std::to_string(indices_[i]) + " at step " +
                                                        std::to_string(i + 1) + " outside 1.." + std::to_string(n));
        }
    }
}

std::string MutationSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(indices_[i]);
    }
    return out;
}

ExtendedMatrix::ExtendedMatrix(IntMatrix data, std::vector<Int> symmetrizer)
    : data_(std::move(data)), symmetrizer_(std::move(symmetrizer)) {
    if (data_.rows() < data_.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "extended matrix needs at least as many rows as columns");
    }
    if (!certifies(principal(), symmetrizer_)) {
        throw Error(ErrorKind::NotSkewSymmetrizable, "principal part is not skew-symmetrizable by the given symmetrizer");
    }
}

ExchangeMatrix ExtendedMatrix::exchange_matrix() const { return ExchangeMatrix(principal(), symmetrizer_); }

ExtendedMatrix frame(const ExchangeMatrix& b) { return stack(b, IntMatrix::identity(b.size())); }

ExtendedMatrix stack(const ExchangeMatrix& b, const IntMatrix& attached) {
    if (attached.cols() != b.size() && attached.rows() != 0) {
        throw Error(ErrorKind::ShapeMismatch, "attached rows have " + std::to_string(attached.cols()) +
                                                  " columns, principal part has " + std::to_string(b.size()));
    }
    IntMatrix data(b.size() + attached.rows(), b.size());
    for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) data(r, c) = b(r, c);
    for (std::size_t r = 0; r < attached.rows(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) data(b.size() + r, c) = attached(r, c);
    return ExtendedMatrix(std::move(data), b.symmetrizer());
}

IntMatrix mutate_entries(const IntMatrix& m, std::size_t k) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Int& bik = m(i, k);
        const int sik = sign(bik);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = checked_neg(m(i, j));
            } else if (sik != 0 && sign(m(k, j)) == sik) {
                // b_ik * b_kj > 0: add sgn(b_ik) * b_ik * b_kj
                const Int prod = checked_mul(bik, m(k, j));
                out(i, j) = sik > 0 ? checked_add(m(i, j), prod) : checked_sub(m(i, j), prod);
            } else {
                out(i, j) = m(i, j);
            }
        }
    }
    return out;
}

ExtendedMatrix mutate(const ExtendedMatrix& m, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > m.n()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "mutation direction " + std::to_string(k) + " outside 1.." + std::to_string(m.n()));
    }
    return ExtendedMatrix(ExtendedMatrix::Trusted{}, mutate_entries(m.data(), static_cast<std::size_t>(k - 1)),
                          m.symmetrizer());
}

ExtendedMatrix mutate_sequence(const ExtendedMatrix& m, const MutationSequence& seq) {
    seq.check_range(m.n());
    ExtendedMatrix current = m;
    for (int k : seq) current = mutate(current, k);
    return current;
}

}  // namespace greenseq
