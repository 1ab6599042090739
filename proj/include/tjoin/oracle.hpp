#pragma once

#include <vector>

#include "tjoin/graph.hpp"
#include "tjoin/matching.hpp"

namespace tjoin {

// Edge subset together with its weight and odd-degree vertex set.
struct ValidEdgeSet {
    std::vector<int> edge_indices;  // indices into the source graph's edge list
    double weight = 0.0;
    std::vector<int> odd_vertices;  // always even-sized
};

struct MuResult {
    double value = 0.0;
    std::vector<int> subset;
};

struct EquivalenceReport {
    double max_valid_weight = 0.0;
    double mu_value = 0.0;
    std::vector<int> odd_vertices;
    double odd_matching_cost = 0.0;
    bool consistent = false;
};

// True iff every simple cycle C satisfies w(C) >= 2 w(C ∩ J) within kTol.
// Requires |E| <= 20 (exhaustive cycle enumeration).
bool is_valid_edge_set(const WeightedGraph& g, const std::vector<int>& edge_indices);

// All simple cycles as edge-index lists (helper shared with tests).
std::vector<std::vector<int>> enumerate_simple_cycles(const WeightedGraph& g);

// Maximum-weight valid edge subset by exhaustive search, |E| <= 16.
// Ties resolved toward the lexicographically smallest edge-index list.
ValidEdgeSet brute_force_max_valid_set(const WeightedGraph& g);

// Exact max-min T-join value: max over even subsets T of the minimum
// matching cost of T. n <= 12. Ties pick the lexicographically smallest
// vertex subset.
MuResult brute_force_mu(const DistanceMatrix& d);

// Same maximum restricted to subsets of size exactly 2k.
MuResult brute_force_mu_2k(const DistanceMatrix& d, int k);

// Cross-checks the valid-set and subset-matching formulations on one graph.
// Requires |E| <= 16, n <= 10, connected input.
EquivalenceReport check_formulation_equivalence(const WeightedGraph& g);

}  // namespace tjoin
