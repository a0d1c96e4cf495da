#include "greenseq/coherence.hpp"

#include "level_search.hpp"

namespace greenseq {

std::string_view to_string(ColumnSign s) {
    switch (s) {
    case ColumnSign::Green: return "green";
    case ColumnSign::Red: return "red";
    case ColumnSign::Zero: return "zero";
    case ColumnSign::Mixed: return "mixed";
    }
    return "?";
}

ColumnSign column_sign(const IntMatrix& m, int j) {
    if (j < 1 || static_cast<std::size_t>(j) > m.cols()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "column " + std::to_string(j) + " outside 1.." + std::to_string(m.cols()));
    }
    bool pos = false, neg = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const int s = sign(m(r, static_cast<std::size_t>(j - 1)));
        pos |= s > 0;
        neg |= s < 0;
    }
    if (pos && neg) return ColumnSign::Mixed;
    if (pos) return ColumnSign::Green;
    if (neg) return ColumnSign::Red;
    return ColumnSign::Zero;
}

int epsilon(ColumnSign s) {
    if (s == ColumnSign::Green) return 1;
    if (s == ColumnSign::Red) return -1;
    throw Error(ErrorKind::InternalSignViolation,
                "column sign is only defined for green or red columns, got " + std::string(to_string(s)));
}

bool column_sign_coherent(const IntMatrix& m) {
    for (std::size_t j = 1; j <= m.cols(); ++j)
        if (column_sign(m, static_cast<int>(j)) == ColumnSign::Mixed) return false;
    return true;
}

bool row_sign_coherent(const IntMatrix& m) { return column_sign_coherent(m.transposed()); }

namespace {

// First (column, row) in the given row range where a column turns mixed.
std::optional<std::pair<int, int>> first_mixed(const IntMatrix& m, std::size_t row_begin, std::size_t row_end) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        int seen = 0;
        for (std::size_t r = row_begin; r < row_end; ++r) {
            const int s = sign(m(r, j));
            if (s == 0) continue;
            if (seen == 0) {
                seen = s;
            } else if (s != seen) {
                return std::make_pair(static_cast<int>(r - row_begin + 1), static_cast<int>(j + 1));
            }
        }
    }
    return std::nullopt;
}

detail::LevelSearchLimits limits_from(const CoherenceOptions& o) {
    detail::LevelSearchLimits limits;
    limits.max_depth = o.depth;
    limits.max_states = o.max_states;
    limits.threads = o.threads;
    return limits;
}

std::vector<int> all_but_last(std::size_t n, int last) {
    std::vector<int> out;
    for (int k = 1; static_cast<std::size_t>(k) <= n; ++k)
        if (k != last) out.push_back(k);
    return out;
}

CoherenceVerdict to_verdict(const detail::LevelSearchResult& r, int depth) {
    CoherenceVerdict v;
    v.depth = depth;
    v.states_visited = r.states_visited;
    switch (r.status) {
    case detail::LevelSearchStatus::Found: v.status = CoherenceStatus::Counterexample; break;
    case detail::LevelSearchStatus::Exhausted: v.status = CoherenceStatus::VerifiedToDepth; break;
    case detail::LevelSearchStatus::OutOfBudget: v.status = CoherenceStatus::OutOfBudget; break;
    }
    return v;
}

}  // namespace

CoherenceVerdict check_uniform_sign_coherence(const ExchangeMatrix& b1, const IntMatrix& b2,
                                              const CoherenceOptions& options) {
    const std::size_t n = b1.size();
    if (b2.cols() != n) {
        throw Error(ErrorKind::ShapeMismatch, "attached block has " + std::to_string(b2.cols()) +
                                                  " columns, principal part has " + std::to_string(n));
    }
    if (auto bad = first_mixed(b2, 0, b2.rows())) {
        throw Error(ErrorKind::NotSignCoherentInput,
                    "attached block column " + std::to_string(bad->second) + " is not sign-coherent");
    }
    if (options.depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be nonnegative");

    if (options.use_certificates) {
        CoherenceVerdict v;
        v.depth = options.depth;
        if (is_nonnegative(b2)) {
            v.certificate = CoherenceCertificate::Nonnegative;
            return v;
        }
        if (exact_rank(b2) <= 1) {
            v.certificate = CoherenceCertificate::RankAtMostOne;
            return v;
        }
    }

    const ExtendedMatrix start = stack(b1, b2);
    const std::size_t total_rows = start.data().rows();
    detail::LevelSearchProblem problem;
    problem.directions = [n](const IntMatrix&, int last) { return all_but_last(n, last); };
    problem.step = [](const IntMatrix& s, int k) { return mutate_entries(s, static_cast<std::size_t>(k - 1)); };
    problem.goal = [n, total_rows](const IntMatrix& s) { return first_mixed(s, n, total_rows).has_value(); };

    const auto r = detail::breadth_first(problem, start.data(), limits_from(options));
    CoherenceVerdict v = to_verdict(r, options.depth);
    if (v.status == CoherenceStatus::Counterexample) {
        const IntMatrix reached = mutate_sequence(start, MutationSequence(r.path)).data();
        const auto where = first_mixed(reached, n, total_rows);
        v.counterexample = CoherenceCounterexample{MutationSequence(r.path), where->first, where->second};
    }
    return v;
}

bool scaling_commutation_check(const ExchangeMatrix& b1, const IntMatrix& b2, const IntMatrix& p, int k) {
    const std::size_t n = b1.size();
    if (b2.cols() != n) {
        throw Error(ErrorKind::ShapeMismatch, "B2 has " + std::to_string(b2.cols()) + " columns, expected " +
                                                  std::to_string(n));
    }
    if (p.cols() != b2.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "P has " + std::to_string(p.cols()) + " columns, B2 has " +
                                                  std::to_string(b2.rows()) + " rows");
    }
    if (!column_sign_coherent(b2)) {
        throw Error(ErrorKind::NotSignCoherentInput, "B2 must be column sign-coherent");
    }
    if (!is_nonnegative(p)) throw Error(ErrorKind::NonNegativityViolation, "P must be nonnegative");

    const ExtendedMatrix scaled_then_mutated = mutate(stack(b1, multiply(p, b2)), k);
    const ExtendedMatrix mutated = mutate(stack(b1, b2), k);
    const IntMatrix mutated_then_scaled = vstack(mutated.principal(), multiply(p, mutated.attached()));
    return scaled_then_mutated.data() == mutated_then_scaled;
}

CoherenceVerdict block_invariance_check(const ExchangeMatrix& b, std::size_t split, const CoherenceOptions& options) {
    const std::size_t total = b.size();
    if (split < 1 || split >= total) {
        throw Error(ErrorKind::InvalidSplit, "split " + std::to_string(split) + " must leave both blocks nonempty (size " +
                                                 std::to_string(total) + ")");
    }
    if (options.depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be nonnegative");

    const IntMatrix& start = b.matrix();
    auto changed_at = [&start, split, total](const IntMatrix& s) -> std::optional<std::pair<int, int>> {
        for (std::size_t i = split; i < total; ++i)
            for (std::size_t j = split; j < total; ++j)
                if (s(i, j) != start(i, j))
                    return std::make_pair(static_cast<int>(i - split + 1), static_cast<int>(j - split + 1));
        return std::nullopt;
    };

    detail::LevelSearchProblem problem;
    problem.directions = [split](const IntMatrix&, int last) { return all_but_last(split, last); };
    problem.step = [](const IntMatrix& s, int k) { return mutate_entries(s, static_cast<std::size_t>(k - 1)); };
    problem.goal = [&](const IntMatrix& s) { return changed_at(s).has_value(); };

    const auto r = detail::breadth_first(problem, start, limits_from(options));
    CoherenceVerdict v = to_verdict(r, options.depth);
    if (v.status == CoherenceStatus::Counterexample) {
        IntMatrix reached = start;
        for (int k : r.path) reached = mutate_entries(reached, static_cast<std::size_t>(k - 1));
        const auto where = changed_at(reached);
        v.counterexample = CoherenceCounterexample{MutationSequence(r.path), where->first, where->second};
    }
    return v;
}

}  // namespace greenseq
