#pragma once

#include <vector>

#include "greenseq/int_matrix.hpp"

namespace greenseq::fixtures {

// Oriented 3-cycle.
inline IntMatrix cycle3() { return {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}; }

// Weighted 3-cycle, symmetrizer (2,1,1).
inline IntMatrix weighted_cycle3() { return {{0, 1, -1}, {-2, 0, 2}, {2, -2, 0}}; }

// Rank-two pair, symmetrizer (3,2).
inline IntMatrix rank2_pair() { return {{0, -2}, {3, 0}}; }

inline IntMatrix path2() { return {{0, 1}, {-1, 0}}; }

inline IntMatrix markov3() { return {{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}; }

// 3-cycle block {1,2,3} followed by a rank-two pair {4,5}; symmetrizer (1,1,1,1,2).
inline IntMatrix five_vertex() {
    return {{0, 1, -1, -2, -2}, {-1, 0, 1, 0, -4}, {1, -1, 0, -3, 0}, {2, 0, 3, 0, -2}, {1, 2, 0, 1, 0}};
}

// Framed cycle3 and its images under 2, 3, 1, 2.
inline std::vector<IntMatrix> cycle3_trace() {
    return {
        {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{0, -1, 0}, {1, 0, -1}, {0, 1, 0}, {1, 0, 0}, {0, -1, 1}, {0, 0, 1}},
        {{0, -1, 0}, {1, 0, 1}, {0, -1, 0}, {1, 0, 0}, {0, 0, -1}, {0, 1, -1}},
        {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {-1, 0, 0}, {0, 0, -1}, {0, 1, -1}},
        {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}, {-1, 0, 0}, {0, 0, -1}, {0, -1, 0}},
    };
}

// Framed rank2_pair and its images under 1, 2.
inline std::vector<IntMatrix> rank2_pair_trace() {
    return {
        {{0, -2}, {3, 0}, {1, 0}, {0, 1}},
        {{0, 2}, {-3, 0}, {-1, 0}, {0, 1}},
        {{0, -2}, {3, 0}, {-1, 0}, {0, -1}},
    };
}

// Framed five_vertex and its images under 2, 3, 1, 2, 4, 5.
inline std::vector<IntMatrix> five_vertex_trace() {
    return {
        {{0, 1, -1, -2, -2}, {-1, 0, 1, 0, -4}, {1, -1, 0, -3, 0}, {2, 0, 3, 0, -2}, {1, 2, 0, 1, 0},
         {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
        {{0, -1, 0, -2, -2}, {1, 0, -1, 0, 4}, {0, 1, 0, -3, -4}, {2, 0, 3, 0, -2}, {1, -2, 2, 1, 0},
         {1, 0, 0, 0, 0}, {0, -1, 1, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
        {{0, -1, 0, -2, -2}, {1, 0, 1, -3, 0}, {0, -1, 0, 3, 4}, {2, 3, -3, 0, -2}, {1, 0, -2, 1, 0},
         {1, 0, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 1, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
        {{0, 1, 0, 2, 2}, {-1, 0, 1, -3, 0}, {0, -1, 0, 3, 4}, {-2, 3, -3, 0, -2}, {-1, 0, -2, 1, 0},
         {-1, 0, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 1, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
        {{0, -1, 1, 2, 2}, {1, 0, -1, 3, 0}, {-1, 1, 0, 0, 4}, {-2, -3, 0, 0, -2}, {-1, 0, -2, 1, 0},
         {-1, 0, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
        {{0, -1, 1, -2, 2}, {1, 0, -1, -3, 0}, {-1, 1, 0, 0, 4}, {2, 3, 0, 0, 2}, {-1, 0, -2, -1, 0},
         {-1, 0, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}},
        {{0, -1, 1, -2, -2}, {1, 0, -1, -3, 0}, {-1, 1, 0, 0, -4}, {2, 3, 0, 0, -2}, {1, 0, 2, 1, 0},
         {-1, 0, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}},
    };
}

}  // namespace greenseq::fixtures
