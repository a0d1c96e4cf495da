#include "greenseq/exchange_matrix.hpp"

#include <queue>
#include <string>

namespace greenseq {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
    return "b(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

[[noreturn]] void not_symmetrizable(const std::string& why) {
    throw Error(ErrorKind::NotSkewSymmetrizable, "matrix is not skew-symmetrizable: " + why);
}

void check_sign_pattern(const IntMatrix& b) {
    const std::size_t n = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (b(i, i) != 0) not_symmetrizable(entry_name(i, i) + " = " + to_string(b(i, i)) + " is nonzero");
        for (std::size_t j = i + 1; j < n; ++j) {
            const int sij = sign(b(i, j));
            const int sji = sign(b(j, i));
            if ((sij == 0) != (sji == 0)) {
                not_symmetrizable("exactly one of " + entry_name(i, j) + " and " + entry_name(j, i) + " is zero");
            }
            if (sij != 0 && sij == sji) {
                not_symmetrizable(entry_name(i, j) + " and " + entry_name(j, i) + " have the same sign");
            }
        }
    }
}

struct Ratio {
    Int num = 0;
    Int den = 1;
};

Ratio reduced(Int num, Int den) {
    const Int g = gcd(num, den);
    return {num / g, den / g};
}

}  // namespace

bool certifies(const IntMatrix& b, std::span<const Int> s) {
    if (!b.is_square() || s.size() != b.rows()) return false;
    for (const Int& x : s)
        if (x < 1) return false;
    const std::size_t n = b.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (checked_mul(s[i], b(i, j)) != checked_neg(checked_mul(s[j], b(j, i)))) return false;
    return true;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix b, std::vector<Int> symmetrizer)
    : b_(std::move(b)), symmetrizer_(std::move(symmetrizer)) {
    if (!b_.is_square()) {
        throw Error(ErrorKind::ShapeMismatch, "exchange matrix must be square, got " + std::to_string(b_.rows()) +
                                                  "x" + std::to_string(b_.cols()));
    }
    if (!certifies(b_, symmetrizer_)) {
        not_symmetrizable("the given symmetrizer does not make SB skew-symmetric");
    }
}

ExchangeMatrix find_symmetrizer(const IntMatrix& b) {
    if (!b.is_square()) {
        throw Error(ErrorKind::ShapeMismatch, "exchange matrix must be square, got " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
    }
    check_sign_pattern(b);

    const std::size_t n = b.rows();
    std::vector<Ratio> value(n);
    std::vector<bool> seen(n, false);
    std::vector<Int> s(n, Int(1));

    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> component;
        std::queue<std::size_t> queue;
        value[root] = {1, 1};
        seen[root] = true;
        queue.push(root);
        while (!queue.empty()) {
            const std::size_t i = queue.front();
            queue.pop();
            component.push_back(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || b(i, j) == 0) continue;
                // s_j = s_i * (-b_ij) / b_ji; the sign pattern makes the ratio positive.
                const Ratio next = reduced(checked_mul(value[i].num, abs_value(b(i, j))),
                                           checked_mul(value[i].den, abs_value(b(j, i))));
                if (!seen[j]) {
                    seen[j] = true;
                    value[j] = next;
                    queue.push(j);
                } else if (checked_mul(next.num, value[j].den) != checked_mul(value[j].num, next.den)) {
                    not_symmetrizable("inconsistent ratio s" + std::to_string(j + 1) + "/s" +
                                      std::to_string(i + 1) + " around a cycle through " + entry_name(i, j));
                }
            }
        }
        Int common_den = 1;
        for (std::size_t v : component) common_den = lcm(common_den, value[v].den);
        Int common_num = 0;
        for (std::size_t v : component) {
            s[v] = checked_mul(value[v].num, common_den / value[v].den);
            common_num = gcd(common_num, s[v]);
        }
        for (std::size_t v : component) s[v] /= common_num;
    }

    if (!certifies(b, s)) not_symmetrizable("no consistent symmetrizer exists");
    return ExchangeMatrix(b, std::move(s));
}

namespace {

std::vector<std::size_t> zero_based(std::span<const int> vertices, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(vertices.size());
    for (int v : vertices) {
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
}

}  // namespace

ExchangeMatrix principal_submatrix(const ExchangeMatrix& b, std::span<const int> vertices) {
    const auto idx = zero_based(vertices, b.size());
    return find_symmetrizer(b.matrix().submatrix(idx, idx));
}

ExchangeMatrix relabel(const ExchangeMatrix& b, std::span<const int> order) {
    const auto idx = zero_based(order, b.size());
    std::vector<bool> hit(b.size(), false);
    for (std::size_t i : idx) {
        if (hit[i]) throw Error(ErrorKind::ShapeMismatch, "relabel: order is not a permutation");
        hit[i] = true;
    }
    if (idx.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "relabel: order is not a permutation");
    std::vector<Int> s;
    s.reserve(idx.size());
    for (std::size_t i : idx) s.push_back(b.symmetrizer()[i]);
    return ExchangeMatrix(b.matrix().submatrix(idx, idx), std::move(s));
}

}  // namespace greenseq
