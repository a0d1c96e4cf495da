#include "greenseq/green_search.hpp"

#include <numeric>

#include "level_search.hpp"

namespace greenseq {

namespace {

[[noreturn]] void sign_violation(int column, ColumnSign s) {
    throw Error(ErrorKind::InternalSignViolation, "C-matrix column " + std::to_string(column) + " is " +
                                                      std::string(to_string(s)) + ", expected green or red");
}

// Column signs of the C-part (rows n..2n-1) of a framed state.
std::vector<ColumnSign> c_signs(const IntMatrix& framed, std::size_t n) {
    std::vector<ColumnSign> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        bool pos = false, neg = false;
        for (std::size_t r = n; r < 2 * n; ++r) {
            const int s = sign(framed(r, j));
            pos |= s > 0;
            neg |= s < 0;
        }
        out[j] = pos ? (neg ? ColumnSign::Mixed : ColumnSign::Green) : (neg ? ColumnSign::Red : ColumnSign::Zero);
    }
    return out;
}

std::vector<int> green_columns(const IntMatrix& framed, std::size_t n) {
    std::vector<int> greens;
    const auto signs = c_signs(framed, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (signs[j] == ColumnSign::Green) {
            greens.push_back(static_cast<int>(j + 1));
        } else if (signs[j] != ColumnSign::Red) {
            sign_violation(static_cast<int>(j + 1), signs[j]);
        }
    }
    return greens;
}

std::vector<int> one_to(std::size_t n, int offset = 0) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1 + offset);
    return v;
}

void check_split(const ExchangeMatrix& b, std::size_t split) {
    if (split < 1 || split >= b.size()) {
        throw Error(ErrorKind::InvalidSplit, "split " + std::to_string(split) +
                                                 " must leave both blocks nonempty (size " + std::to_string(b.size()) +
                                                 ")");
    }
    for (std::size_t i = split; i < b.size(); ++i)
        for (std::size_t j = 0; j < split; ++j)
            if (b(i, j) < 0) {
                throw Error(ErrorKind::NonNegativityViolation,
                            "lower-left block entry b(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") = " + to_string(b(i, j)) + " is negative");
            }
}

bool qualifies(const SequenceVerdict& v, SearchTarget target) {
    return target == SearchTarget::MaximalGreen ? v.is_maximal_green : v.is_green_to_red;
}

}  // namespace

GreenState::GreenState(const ExchangeMatrix& b) : ext_(frame(b)) { classify_columns(); }

GreenState::GreenState(ExtendedMatrix ext, MutationSequence history)
    : ext_(std::move(ext)), history_(std::move(history)) {
    classify_columns();
}

void GreenState::classify_columns() {
    greens_ = green_columns(ext_.data(), ext_.n());
    reds_.clear();
    std::size_t g = 0;
    for (int j = 1; static_cast<std::size_t>(j) <= ext_.n(); ++j) {
        if (g < greens_.size() && greens_[g] == j) {
            ++g;
        } else {
            reds_.push_back(j);
        }
    }
}

GreenState GreenState::advance(int k) const {
    MutationSequence next = history_;
    next.push_back(k);
    return GreenState(mutate(ext_, k), std::move(next));
}

bool GreenState::is_green(int k) const { return std::binary_search(greens_.begin(), greens_.end(), k); }

GreenRedIndices green_indices(const GreenState& state) { return {state.greens(), state.reds()}; }

GreenRedIndices green_indices(const IntMatrix& c) {
    GreenRedIndices out;
    for (int j = 1; static_cast<std::size_t>(j) <= c.cols(); ++j) {
        const ColumnSign s = column_sign(c, j);
        if (s == ColumnSign::Green) {
            out.greens.push_back(j);
        } else if (s == ColumnSign::Red) {
            out.reds.push_back(j);
        } else {
            sign_violation(j, s);
        }
    }
    return out;
}

SequenceVerdict verify_sequence(const ExchangeMatrix& b, const MutationSequence& seq) {
    seq.check_range(b.size());
    SequenceVerdict v;
    v.is_green_sequence = true;
    GreenState state(b);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const int k = seq[i];
        if (v.is_green_sequence && !state.is_green(k)) {
            v.is_green_sequence = false;
            v.first_violation = SequenceViolation{i + 1, k, ColumnSign::Red};
        }
        state = state.advance(k);
    }
    v.is_green_to_red = state.all_red();
    if (!v.is_green_to_red && !v.first_violation) {
        v.first_violation = SequenceViolation{seq.size(), state.greens().front(), ColumnSign::Green};
    }
    v.is_maximal_green = v.is_green_sequence && v.is_green_to_red;
    return v;
}

std::string_view to_string(SearchTarget t) { return t == SearchTarget::MaximalGreen ? "mgs" : "g2r"; }
std::string_view to_string(SearchStrategy s) { return s == SearchStrategy::Bfs ? "bfs" : "iddfs"; }
std::string_view to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedToDepth: return "exhaustedToDepth";
    case SearchStatus::OutOfBudget: return "outOfBudget";
    }
    return "?";
}

SearchOutcome find_sequence(const ExchangeMatrix& b, SearchTarget target, const SearchOptions& options) {
    if (options.max_depth < 0) throw Error(ErrorKind::InvalidArgument, "max depth must be nonnegative");
    const auto started = detail::Clock::now();
    const std::size_t n = b.size();
    SearchOutcome outcome;
    outcome.depth = options.max_depth;

    detail::LevelSearchProblem problem;
    if (target == SearchTarget::MaximalGreen) {
        problem.directions = [n](const IntMatrix& s, int) { return green_columns(s, n); };
        // Every green index other than the mutated one stays green.
        problem.on_edge = [n, &outcome](const IntMatrix& parent, int k, const IntMatrix& child) {
            const auto before = c_signs(parent, n);
            const auto after = c_signs(child, n);
            for (std::size_t j = 0; j < n; ++j) {
                if (static_cast<int>(j + 1) == k || before[j] != ColumnSign::Green) continue;
                ++outcome.persistence_checks;
                if (after[j] != ColumnSign::Green) ++outcome.persistence_violations;
            }
        };
    } else {
        problem.directions = [n](const IntMatrix&, int last) {
            std::vector<int> out;
            for (int k = 1; static_cast<std::size_t>(k) <= n; ++k)
                if (k != last) out.push_back(k);
            return out;
        };
    }
    problem.step = [](const IntMatrix& s, int k) { return mutate_entries(s, static_cast<std::size_t>(k - 1)); };
    problem.goal = [n](const IntMatrix& s) {
        for (std::size_t r = n; r < 2 * n; ++r)
            for (std::size_t j = 0; j < n; ++j)
                if (s(r, j) > 0) return false;
        return true;
    };

    detail::LevelSearchLimits limits;
    limits.max_depth = options.max_depth;
    limits.max_states = options.max_states;
    limits.threads = options.threads;
    if (options.timeout) limits.deadline = started + *options.timeout;

    const IntMatrix root = frame(b).data();
    const auto r = options.strategy == SearchStrategy::Bfs ? detail::breadth_first(problem, root, limits)
                                                           : detail::iterative_deepening(problem, root, limits);
    outcome.states_visited = r.states_visited;
    switch (r.status) {
    case detail::LevelSearchStatus::Found:
        outcome.status = SearchStatus::Found;
        outcome.sequence = MutationSequence(r.path);
        break;
    case detail::LevelSearchStatus::Exhausted: outcome.status = SearchStatus::ExhaustedToDepth; break;
    case detail::LevelSearchStatus::OutOfBudget: outcome.status = SearchStatus::OutOfBudget; break;
    }
    if (outcome.sequence && !qualifies(verify_sequence(b, *outcome.sequence), target)) {
        throw Error(ErrorKind::InternalSignViolation, "search returned a sequence that does not re-verify");
    }
    outcome.elapsed = detail::Clock::now() - started;
    return outcome;
}

MutationSequence compose_mgs(const ExchangeMatrix& b, std::size_t split, const MutationSequence& seq1,
                             const MutationSequence& seq2, SearchTarget target) {
    check_split(b, split);
    const std::size_t m = b.size() - split;
    const ExchangeMatrix b1 = principal_submatrix(b, one_to(split));
    const ExchangeMatrix b4 = principal_submatrix(b, one_to(m, static_cast<int>(split)));
    const char* what = target == SearchTarget::MaximalGreen ? "maximal green" : "green-to-red";
    auto require = [&](const ExchangeMatrix& block, const MutationSequence& seq, const char* name) {
        for (int k : seq)
            if (static_cast<std::size_t>(k) > block.size()) {
                throw Error(ErrorKind::InvalidInputSequence, std::string(name) + " index " + std::to_string(k) +
                                                                 " outside 1.." + std::to_string(block.size()));
            }
        if (!qualifies(verify_sequence(block, seq), target)) {
            throw Error(ErrorKind::InvalidInputSequence, std::string(name) + " (" + seq.to_string() + ") is not a " +
                                                             what + " sequence of its block");
        }
    };
    require(b1, seq1, "first sequence");
    require(b4, seq2, "second sequence");

    MutationSequence result = seq1.concat(seq2.shifted(static_cast<int>(split)));
    if (!qualifies(verify_sequence(b, result), target)) {
        throw Error(ErrorKind::InternalSignViolation, "composed sequence " + result.to_string() + " is not " + what);
    }
    return result;
}

std::pair<MutationSequence, MutationSequence> split_mgs(const ExchangeMatrix& b, std::size_t split,
                                                        const MutationSequence& seq) {
    check_split(b, split);
    seq.check_range(b.size());
    std::size_t cut = 0;
    while (cut < seq.size() && static_cast<std::size_t>(seq[cut]) <= split) ++cut;
    for (std::size_t i = cut; i < seq.size(); ++i) {
        if (static_cast<std::size_t>(seq[i]) <= split) {
            throw Error(ErrorKind::ShapeViolation, "index " + std::to_string(seq[i]) + " at step " +
                                                       std::to_string(i + 1) + " follows an index above the split " +
                                                       std::to_string(split));
        }
    }
    if (!verify_sequence(b, seq).is_maximal_green) {
        throw Error(ErrorKind::InvalidInputSequence, "(" + seq.to_string() + ") is not a maximal green sequence");
    }
    const std::vector<int> head(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cut));
    const std::vector<int> tail(seq.begin() + static_cast<std::ptrdiff_t>(cut), seq.end());
    MutationSequence first(head);
    MutationSequence second = MutationSequence(tail).shifted(-static_cast<int>(split));

    const std::size_t m = b.size() - split;
    if (!verify_sequence(principal_submatrix(b, one_to(split)), first).is_maximal_green ||
        !verify_sequence(principal_submatrix(b, one_to(m, static_cast<int>(split))), second).is_maximal_green) {
        throw Error(ErrorKind::InternalSignViolation, "block restriction of a maximal green sequence failed to verify");
    }
    return {std::move(first), std::move(second)};
}

ReductionOutcome reduce_and_search(const ExchangeMatrix& b, SearchTarget target, const SearchOptions& per_block) {
    const auto started = detail::Clock::now();
    ReductionOutcome result;
    result.decomposition = decompose(b);
    result.outcome.depth = per_block.max_depth;

    const auto& blocks = result.decomposition.blocks;
    const ExchangeMatrix relabelled = relabel(b, result.decomposition.permutation);
    MutationSequence glued;
    std::size_t prefix = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        SearchOutcome block = find_sequence(principal_submatrix(b, blocks[t]), target, per_block);
        result.outcome.states_visited += block.states_visited;
        result.outcome.persistence_checks += block.persistence_checks;
        result.outcome.persistence_violations += block.persistence_violations;
        const bool ok = block.found();
        const SearchStatus status = block.status;
        const MutationSequence block_seq = ok ? *block.sequence : MutationSequence{};
        result.block_outcomes.push_back(std::move(block));
        if (!ok) {
            result.outcome.status = status;
            result.failing_block = t;
            result.outcome.elapsed = detail::Clock::now() - started;
            return result;
        }
        // Blocks occupy consecutive positions of the relabelled matrix, so the
        // block found so far and the next block form a split whose lower-left
        // part is nonnegative.
        if (t == 0) {
            glued = block_seq;
        } else {
            const ExchangeMatrix leading = principal_submatrix(relabelled, one_to(prefix + blocks[t].size()));
            glued = compose_mgs(leading, prefix, glued, block_seq, target);
        }
        prefix += blocks[t].size();
    }

    std::vector<int> original;
    original.reserve(glued.size());
    for (int k : glued) original.push_back(result.decomposition.permutation[static_cast<std::size_t>(k - 1)]);
    MutationSequence answer(std::move(original));
    if (!qualifies(verify_sequence(b, answer), target)) {
        throw Error(ErrorKind::InternalSignViolation, "glued sequence " + answer.to_string() + " does not verify");
    }
    result.outcome.status = SearchStatus::Found;
    result.outcome.sequence = std::move(answer);
    result.outcome.elapsed = detail::Clock::now() - started;
    return result;
}

}  // namespace greenseq
