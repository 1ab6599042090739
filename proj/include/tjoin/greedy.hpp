#pragma once

#include <optional>
#include <vector>

#include "tjoin/graph.hpp"

namespace tjoin {

// Farthest-point-first vertex ordering with per-step distances
// d(v_i, {v_1..v_{i-1}}); the first entry is a +inf sentinel.
struct GreedyOrdering {
    std::vector<int> order;
    std::vector<double> step_distance;
};

// Per-k bound row for the prefix matching sequence.
struct PrefixBounds {
    int k = 0;
    double mwm_prefix = 0.0;   // mwm of the first 2k ordered vertices
    double opt_prefix = 0.0;   // running max of mwm_prefix
    double harmonic_ub = 0.0;  // 2 (1 + H_{k-1}) * opt_prefix
    std::optional<double> tsp_ub;  // filled by callers that also run a tour
};

struct TJoinBounds {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<int> selected;  // the prefix achieving the lower bound
};

// H_0 = 0, H_m = 1 + 1/2 + ... + 1/m.
double harmonic(int m);

// O(n^2) farthest-point ordering; ties broken toward the smaller index.
GreedyOrdering greedy_ordering(const DistanceMatrix& d, int start);

// Rows for k = 1..floor(n/2); O(nk + k^4) overall.
std::vector<PrefixBounds> prefix_matching_sequence(const DistanceMatrix& d,
                                                   const GreedyOrdering& ord);

// lower = max_k mwm_prefix(k) <= mu <= upper = 2 (1 + H_{floor(n/2)-1}) * lower.
TJoinBounds tjoin_bounds(const DistanceMatrix& d, int start = 0);

}  // namespace tjoin
