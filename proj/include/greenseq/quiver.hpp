#pragma once

#include <cstddef>
#include <vector>

#include "greenseq/exchange_matrix.hpp"

namespace greenseq {

// Vertices are numbered 1..n throughout this header.

struct Arrow {
    int source;
    int target;
    Int weight;  // b_ij > 0

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// The underlying quiver of B: an arrow i -> j of weight b_ij whenever b_ij > 0.
class QuiverGraph {
public:
    // Arrows are sorted by (source, target). Throws on a duplicate ordered pair,
    // a nonpositive weight, a loop or an out-of-range endpoint.
    QuiverGraph(std::size_t vertex_count, std::vector<Arrow> arrows);

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::vector<int>& out_neighbours(int v) const { return out_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<int>& in_neighbours(int v) const { return in_[static_cast<std::size_t>(v - 1)]; }

private:
    std::size_t n_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

QuiverGraph underlying_quiver(const IntMatrix& b);
QuiverGraph underlying_quiver(const ExchangeMatrix& b);

// M(a) and N(a); both contain a itself.
struct ReachabilitySets {
    std::vector<int> predecessors;
    std::vector<int> successors;
};
ReachabilitySets reachability_sets(const QuiverGraph& q, int a);

struct QuiverClass {
    bool connected;  // underlying undirected graph; vacuously true for n <= 1
    bool acyclic;
};
QuiverClass classify(const QuiverGraph& q);

// Strongly connected components listed in a topological order of the
// condensation (every cross arrow goes from an earlier to a later component).
// Incomparable components are ordered by their smallest vertex. Each component
// is sorted ascending.
std::vector<std::vector<int>> strongly_connected_components(const QuiverGraph& q);

enum class IrreducibilityMethod {
    Definition,  // enumerate all bipartitions; n <= kDefinitionMethodLimit
    Cycle,       // connected, and every arrow lies on an oriented cycle
};
inline constexpr std::size_t kDefinitionMethodLimit = 12;

bool is_irreducible(const ExchangeMatrix& b, IrreducibilityMethod method);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    // Blocks listed consecutively: relabel(b, permutation) has every
    // below-diagonal cross-block entry >= 0.
    std::vector<int> permutation;

    friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

// Blocks are the strongly connected components of the quiver, sinks first,
// ties broken by smallest vertex.
BlockDecomposition decompose(const ExchangeMatrix& b);

// Checks the BlockDecomposition invariants against b: the blocks partition
// 1..n, the permutation lists them in order, and every cross-block entry below
// the diagonal of the relabelled matrix is nonnegative.
bool is_valid_decomposition(const ExchangeMatrix& b, const BlockDecomposition& d);

}  // namespace greenseq
