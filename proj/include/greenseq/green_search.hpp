#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "greenseq/coherence.hpp"
#include "greenseq/quiver.hpp"

namespace greenseq {

// A framed matrix [B_sigma; C_sigma] reached from [B; I] by `history`, with
// its green and red column indices. Every column of a C-matrix is green or
// red; anything else raises Error(InternalSignViolation).
class GreenState {
public:
    explicit GreenState(const ExchangeMatrix& b);

    // Mutation at k (1-based). Red indices are allowed.
    GreenState advance(int k) const;

    std::size_t n() const noexcept { return ext_.n(); }
    const ExtendedMatrix& extended() const noexcept { return ext_; }
    IntMatrix b() const { return ext_.principal(); }
    IntMatrix c() const { return ext_.attached(); }
    const MutationSequence& history() const noexcept { return history_; }
    const std::vector<int>& greens() const noexcept { return greens_; }
    const std::vector<int>& reds() const noexcept { return reds_; }
    bool is_green(int k) const;
    bool all_red() const noexcept { return greens_.empty(); }

private:
    GreenState(ExtendedMatrix ext, MutationSequence history);
    void classify_columns();

    ExtendedMatrix ext_;
    MutationSequence history_;
    std::vector<int> greens_;
    std::vector<int> reds_;
};

struct GreenRedIndices {
    std::vector<int> greens;
    std::vector<int> reds;
};

GreenRedIndices green_indices(const GreenState& state);
// Same classification for a bare C-matrix.
GreenRedIndices green_indices(const IntMatrix& c);

struct SequenceViolation {
    std::size_t step;  // 1-based step at which the check failed (final step for green-to-red)
    int index;         // offending column index
    ColumnSign sign;   // its sign at that moment
};

struct SequenceVerdict {
    bool is_green_sequence = false;
    bool is_green_to_red = false;
    bool is_maximal_green = false;
    std::optional<SequenceViolation> first_violation;
};

SequenceVerdict verify_sequence(const ExchangeMatrix& b, const MutationSequence& seq);

enum class SearchTarget { MaximalGreen, GreenToRed };
enum class SearchStrategy { Bfs, Iddfs };
enum class SearchStatus {
    Found,
    ExhaustedToDepth,  // no qualifying sequence of length <= depth; never a nonexistence claim beyond that
    OutOfBudget,       // state or time budget ran out first
};

std::string_view to_string(SearchTarget t);
std::string_view to_string(SearchStrategy s);
std::string_view to_string(SearchStatus s);

inline constexpr int kDefaultSearchDepth = 10;

struct SearchOptions {
    int max_depth = kDefaultSearchDepth;
    SearchStrategy strategy = SearchStrategy::Bfs;
    std::size_t max_states = 2'000'000;
    std::optional<std::chrono::milliseconds> timeout;
    unsigned threads = 1;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedToDepth;
    std::optional<MutationSequence> sequence;  // set iff Found
    int depth = 0;                             // the depth bound searched
    std::size_t states_visited = 0;
    std::chrono::nanoseconds elapsed{0};
    // Green-search expansions where a previously green index other than the
    // mutated one turned red. Always zero for a correct engine.
    std::size_t persistence_violations = 0;
    std::size_t persistence_checks = 0;

    bool found() const noexcept { return status == SearchStatus::Found; }
};

// Shortest qualifying sequence (lexicographically least among the shortest).
// MaximalGreen expands only green indices; GreenToRed expands every index.
SearchOutcome find_sequence(const ExchangeMatrix& b, SearchTarget target, const SearchOptions& options = {});

// B = [[B1, B3], [B2, B4]] with B1 of size `split`. Requires B2 >= 0 and seq1,
// seq2 qualifying for `target` on B1 and B4 (seq2 numbered 1..m). Returns
// (seq1, seq2 + split), which qualifies for `target` on B.
MutationSequence compose_mgs(const ExchangeMatrix& b, std::size_t split, const MutationSequence& seq1,
                             const MutationSequence& seq2, SearchTarget target = SearchTarget::MaximalGreen);

// Inverse of compose_mgs for a maximal green sequence of B whose indices are
// all <= split followed by all > split.
std::pair<MutationSequence, MutationSequence> split_mgs(const ExchangeMatrix& b, std::size_t split,
                                                        const MutationSequence& seq);

struct ReductionOutcome {
    SearchOutcome outcome;  // for the whole matrix
    BlockDecomposition decomposition;
    std::vector<SearchOutcome> block_outcomes;  // one per searched block, in block order
    std::optional<std::size_t> failing_block;   // index into decomposition.blocks
};

// Searches each irreducible block separately and glues the block sequences
// together along the decomposition, so the depth bound applies per block.
ReductionOutcome reduce_and_search(const ExchangeMatrix& b, SearchTarget target = SearchTarget::MaximalGreen,
                                   const SearchOptions& per_block = {});

}  // namespace greenseq
