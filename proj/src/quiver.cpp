#include "greenseq/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace greenseq {

QuiverGraph::QuiverGraph(std::size_t vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)), out_(vertex_count), in_(vertex_count) {
    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        const auto in_range = [&](int v) { return v >= 1 && static_cast<std::size_t>(v) <= n_; };
        if (!in_range(a.source) || !in_range(a.target) || a.source == a.target) {
            throw Error(ErrorKind::IndexOutOfRange, "invalid arrow " + std::to_string(a.source) + "->" +
                                                        std::to_string(a.target));
        }
        if (a.weight <= 0) throw Error(ErrorKind::ShapeMismatch, "arrow weights must be positive");
        if (i > 0 && arrows_[i - 1].source == a.source && arrows_[i - 1].target == a.target) {
            throw Error(ErrorKind::ShapeMismatch, "duplicate arrow " + std::to_string(a.source) + "->" +
                                                      std::to_string(a.target));
        }
        out_[static_cast<std::size_t>(a.source - 1)].push_back(a.target);
        in_[static_cast<std::size_t>(a.target - 1)].push_back(a.source);
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
}

QuiverGraph underlying_quiver(const IntMatrix& b) {
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) > 0) arrows.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), b(i, j)});
    return QuiverGraph(b.rows(), std::move(arrows));
}

QuiverGraph underlying_quiver(const ExchangeMatrix& b) { return underlying_quiver(b.matrix()); }

namespace {

std::vector<int> reach(const QuiverGraph& q, int a, bool forward) {
    std::vector<bool> seen(q.vertex_count() + 1, false);
    std::vector<int> stack{a};
    seen[static_cast<std::size_t>(a)] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : forward ? q.out_neighbours(v) : q.in_neighbours(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (std::size_t v = 1; v <= q.vertex_count(); ++v)
        if (seen[v]) out.push_back(static_cast<int>(v));
    return out;
}

// Tarjan's algorithm; returns component id per vertex (0-based vertex index).
std::vector<int> scc_ids(const QuiverGraph& q, int& count) {
    const std::size_t n = q.vertex_count();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next = 0;
    count = 0;

    // Iterative DFS: frame = (vertex, position in its out-list).
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
        index[root] = low[root] = next++;
        stack.push_back(static_cast<int>(root));
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& succ = q.out_neighbours(static_cast<int>(v + 1));
            if (pos < succ.size()) {
                const auto w = static_cast<std::size_t>(succ[pos++] - 1);
                if (index[w] == -1) {
                    index[w] = low[w] = next++;
                    stack.push_back(static_cast<int>(w));
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp[static_cast<std::size_t>(w)] = count;
                } while (static_cast<std::size_t>(w) != v);
                ++count;
            }
            const std::size_t finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                const std::size_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return comp;
}

// Components in topological order of the condensation (or of its reverse when
// sinks_first), ties broken by smallest member.
std::vector<std::vector<int>> ordered_components(const QuiverGraph& q, bool sinks_first) {
    int count = 0;
    const auto comp = scc_ids(q, count);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        members[static_cast<std::size_t>(comp[v])].push_back(static_cast<int>(v + 1));

    std::vector<std::vector<int>> succ(static_cast<std::size_t>(count));
    std::vector<int> indegree(static_cast<std::size_t>(count), 0);
    for (const Arrow& a : q.arrows()) {
        int from = comp[static_cast<std::size_t>(a.source - 1)];
        int to = comp[static_cast<std::size_t>(a.target - 1)];
        if (from == to) continue;
        if (sinks_first) std::swap(from, to);
        succ[static_cast<std::size_t>(from)].push_back(to);
        ++indegree[static_cast<std::size_t>(to)];
    }

    // Kahn's algorithm keyed by smallest member (members are ascending).
    using Key = std::pair<int, int>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (int c = 0; c < count; ++c)
        if (indegree[static_cast<std::size_t>(c)] == 0) ready.emplace(members[static_cast<std::size_t>(c)].front(), c);
    std::vector<std::vector<int>> out;
    while (!ready.empty()) {
        const int c = ready.top().second;
        ready.pop();
        out.push_back(members[static_cast<std::size_t>(c)]);
        for (int d : succ[static_cast<std::size_t>(c)])
            if (--indegree[static_cast<std::size_t>(d)] == 0)
                ready.emplace(members[static_cast<std::size_t>(d)].front(), d);
    }
    return out;
}

}  // namespace

ReachabilitySets reachability_sets(const QuiverGraph& q, int a) {
    if (a < 1 || static_cast<std::size_t>(a) > q.vertex_count()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "vertex " + std::to_string(a) + " outside 1.." + std::to_string(q.vertex_count()));
    }
    return {reach(q, a, false), reach(q, a, true)};
}

QuiverClass classify(const QuiverGraph& q) {
    const std::size_t n = q.vertex_count();
    bool connected = true;
    if (n > 1) {
        std::vector<bool> seen(n + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        std::size_t visited = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto* list : {&q.out_neighbours(v), &q.in_neighbours(v)})
                for (int w : *list)
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = true;
                        ++visited;
                        stack.push_back(w);
                    }
        }
        connected = visited == n;
    }
    int count = 0;
    scc_ids(q, count);
    return {connected, static_cast<std::size_t>(count) == n};
}

std::vector<std::vector<int>> strongly_connected_components(const QuiverGraph& q) {
    return ordered_components(q, false);
}

bool is_irreducible(const ExchangeMatrix& b, IrreducibilityMethod method) {
    const std::size_t n = b.size();
    if (method == IrreducibilityMethod::Definition) {
        if (n > kDefinitionMethodLimit) {
            throw Error(ErrorKind::SizeLimit, "definition method enumerates 2^n bipartitions; n = " +
                                                  std::to_string(n) + " exceeds " +
                                                  std::to_string(kDefinitionMethodLimit));
        }
        // Rows in `rows_mask`, columns in its complement; both nonempty.
        const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
        for (std::uint32_t rows_mask = 1; rows_mask < full; ++rows_mask) {
            bool nonnegative = true;
            for (std::size_t i = 0; i < n && nonnegative; ++i) {
                if (!(rows_mask >> i & 1u)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if ((rows_mask >> j & 1u) == 0 && b(i, j) < 0) {
                        nonnegative = false;
                        break;
                    }
                }
            }
            if (nonnegative) return false;
        }
        return true;
    }
    const QuiverGraph q = underlying_quiver(b);
    if (!classify(q).connected) return false;
    int count = 0;
    const auto comp = scc_ids(q, count);
    return std::all_of(q.arrows().begin(), q.arrows().end(), [&](const Arrow& a) {
        return comp[static_cast<std::size_t>(a.source - 1)] == comp[static_cast<std::size_t>(a.target - 1)];
    });
}

BlockDecomposition decompose(const ExchangeMatrix& b) {
    BlockDecomposition d;
    d.blocks = ordered_components(underlying_quiver(b), true);
    for (const auto& block : d.blocks) d.permutation.insert(d.permutation.end(), block.begin(), block.end());
    return d;
}

bool is_valid_decomposition(const ExchangeMatrix& b, const BlockDecomposition& d) {
    const std::size_t n = b.size();
    std::vector<int> block_of(n + 1, -1);
    std::vector<int> flat;
    for (std::size_t t = 0; t < d.blocks.size(); ++t) {
        if (d.blocks[t].empty()) return false;
        for (int v : d.blocks[t]) {
            if (v < 1 || static_cast<std::size_t>(v) > n || block_of[static_cast<std::size_t>(v)] != -1) return false;
            block_of[static_cast<std::size_t>(v)] = static_cast<int>(t);
            flat.push_back(v);
        }
    }
    if (flat.size() != n || flat != d.permutation) return false;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < r; ++c) {
            const int vr = d.permutation[r];
            const int vc = d.permutation[c];
            if (block_of[static_cast<std::size_t>(vr)] != block_of[static_cast<std::size_t>(vc)] &&
                b(static_cast<std::size_t>(vr - 1), static_cast<std::size_t>(vc - 1)) < 0)
                return false;
        }
    }
    return true;
}

}  // namespace greenseq
