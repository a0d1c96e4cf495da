#pragma once

// Breadth-first and iterative-deepening exploration of mutation orbits over
// exact integer states. Internal to the library.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "greenseq/int_matrix.hpp"

namespace greenseq::detail {

using Clock = std::chrono::steady_clock;

struct LevelSearchLimits {
    int max_depth = 0;
    std::size_t max_states = 0;  // 0 = unlimited
    std::optional<Clock::time_point> deadline;
    unsigned threads = 1;
};

enum class LevelSearchStatus { Found, Exhausted, OutOfBudget };

struct LevelSearchResult {
    LevelSearchStatus status = LevelSearchStatus::Exhausted;
    std::vector<int> path;  // 1-based directions
    std::size_t states_visited = 0;
};

// Callbacks:
//   directions(state, last) -> ascending 1-based directions to try from state;
//                              last is the direction that produced it (0 at root)
//   step(state, k)          -> mutated state
//   on_edge(parent, k, child) called for every generated child, in
//                              deterministic order, before dedup
//   goal(state)             -> true when the search target is reached
struct LevelSearchProblem {
    std::function<std::vector<int>(const IntMatrix&, int)> directions;
    std::function<IntMatrix(const IntMatrix&, int)> step;
    std::function<void(const IntMatrix&, int, const IntMatrix&)> on_edge;
    std::function<bool(const IntMatrix&)> goal;
};

namespace search_internal {

struct Node {
    IntMatrix state;
    std::vector<int> path;
};

struct Expansion {
    std::vector<std::pair<int, IntMatrix>> children;
};

inline Expansion expand(const LevelSearchProblem& p, const Node& node) {
    Expansion e;
    const int last = node.path.empty() ? 0 : node.path.back();
    for (int k : p.directions(node.state, last)) e.children.emplace_back(k, p.step(node.state, k));
    return e;
}

inline bool over_budget(const LevelSearchLimits& limits, std::size_t visited) {
    if (limits.max_states != 0 && visited > limits.max_states) return true;
    return limits.deadline && Clock::now() > *limits.deadline;
}

}  // namespace search_internal

// Level-synchronous BFS with exact-state dedup. Frontier nodes are kept in
// lexicographic order of their paths, so the first goal found is the
// lexicographically least among the shortest. Children of a level may be
// computed on several threads; dedup and goal tests run in order afterwards,
// which keeps the result independent of scheduling.
inline LevelSearchResult breadth_first(const LevelSearchProblem& p, const IntMatrix& root,
                                       const LevelSearchLimits& limits) {
    using namespace search_internal;
    LevelSearchResult result;
    std::unordered_set<IntMatrix, IntMatrixHash> visited;
    visited.insert(root);
    result.states_visited = 1;
    if (p.goal(root)) {
        result.status = LevelSearchStatus::Found;
        return result;
    }

    std::vector<Node> frontier{{root, {}}};
    for (int depth = 1; depth <= limits.max_depth && !frontier.empty(); ++depth) {
        std::vector<Expansion> expansions(frontier.size());
        const unsigned threads = std::max(1u, std::min<unsigned>(limits.threads, static_cast<unsigned>(frontier.size() / 64 + 1)));
        if (threads == 1) {
            for (std::size_t i = 0; i < frontier.size(); ++i) expansions[i] = expand(p, frontier[i]);
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(threads);
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t i = t; i < frontier.size(); i += threads) expansions[i] = expand(p, frontier[i]);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& err : errors)
                if (err) std::rethrow_exception(err);
        }

        std::vector<Node> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (auto& [k, child] : expansions[i].children) {
                if (p.on_edge) p.on_edge(frontier[i].state, k, child);
                if (!visited.insert(child).second) continue;
                ++result.states_visited;
                std::vector<int> path = frontier[i].path;
                path.push_back(k);
                if (p.goal(child)) {
                    result.status = LevelSearchStatus::Found;
                    result.path = std::move(path);
                    return result;
                }
                next.push_back({std::move(child), std::move(path)});
            }
            if (over_budget(limits, result.states_visited)) {
                result.status = LevelSearchStatus::OutOfBudget;
                return result;
            }
        }
        frontier = std::move(next);
    }
    result.status = LevelSearchStatus::Exhausted;
    return result;
}

// Iterative deepening DFS. Within one iteration a state is re-entered only
// when reached with more remaining depth than before, which keeps the first
// solution identical to the BFS one.
inline LevelSearchResult iterative_deepening(const LevelSearchProblem& p, const IntMatrix& root,
                                             const LevelSearchLimits& limits) {
    LevelSearchResult result;
    result.states_visited = 1;
    if (p.goal(root)) {
        result.status = LevelSearchStatus::Found;
        return result;
    }
    bool budget_hit = false;
    for (int bound = 1; bound <= limits.max_depth; ++bound) {
        std::unordered_map<IntMatrix, int, IntMatrixHash> best_depth;
        best_depth.emplace(root, 0);
        std::vector<int> path;
        bool grew = false;

        std::function<bool(const IntMatrix&, int)> dfs = [&](const IntMatrix& state, int depth) -> bool {
            if (depth == bound) return false;
            const int last = path.empty() ? 0 : path.back();
            for (int k : p.directions(state, last)) {
                IntMatrix child = p.step(state, k);
                if (p.on_edge) p.on_edge(state, k, child);
                auto [it, inserted] = best_depth.try_emplace(child, depth + 1);
                if (!inserted) {
                    if (it->second <= depth + 1) continue;
                    it->second = depth + 1;
                }
                ++result.states_visited;
                path.push_back(k);
                if (p.goal(child)) return true;
                if (depth + 1 == bound) grew = true;
                if (search_internal::over_budget(limits, result.states_visited)) {
                    budget_hit = true;
                    return false;
                }
                if (dfs(child, depth + 1)) return true;
                if (budget_hit) return false;
                path.pop_back();
            }
            return false;
        };

        if (dfs(root, 0)) {
            result.status = LevelSearchStatus::Found;
            result.path = path;
            return result;
        }
        if (budget_hit) {
            result.status = LevelSearchStatus::OutOfBudget;
            return result;
        }
        if (!grew) break;  // nothing new at the frontier depth: deeper bounds cannot help
    }
    result.status = LevelSearchStatus::Exhausted;
    return result;
}

}  // namespace greenseq::detail
