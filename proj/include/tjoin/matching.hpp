#pragma once

#include <utility>
#include <vector>

#include "tjoin/graph.hpp"

namespace tjoin {

// Perfect pairing of a designated even-sized vertex subset.
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // each (u,v) with u < v, sorted
    double cost = 0.0;
};

// Exact minimum-weight perfect matching of `subset` under the metric d.
// Among optimal matchings, returns the lexicographically smallest sorted
// pair list. Throws std::invalid_argument on odd subsets; an empty subset
// yields cost 0.
Matching min_weight_perfect_matching(const DistanceMatrix& d, const std::vector<int>& subset);

// Maximum-cardinality matching of the edge set; weights are ignored and
// `cost` reports the cardinality.
Matching max_cardinality_matching(const WeightedGraph& g);

// Exhaustive bitmask DP oracle, |subset| <= 14. Test/oracle use only.
Matching brute_force_matching(const DistanceMatrix& d, const std::vector<int>& subset);

namespace detail {

// Exact minimum-cost perfect matching over a dense symmetric weight matrix
// (m even). Returns mate[i] over local indices. O(m^3) blossom algorithm.
std::vector<int> blossom_min_weight_perfect_matching(const std::vector<double>& w, int m);

// Cost-only helper used by the lexicographic refinement.
double blossom_min_cost(const DistanceMatrix& d, const std::vector<int>& verts);

}  // namespace detail

}  // namespace tjoin
