#pragma once

#include <utility>
#include <vector>

#include "tjoin/graph.hpp"

namespace tjoin {

// Complete graph with every edge weight in {1,2}, stored as the set of
// weight-1 pairs. Such weights always satisfy the triangle inequality.
struct OneTwoInstance {
    int n = 0;
    std::vector<std::pair<int, int>> weight_one;  // sorted pairs, u < v
    std::vector<std::string> labels;

    double weight(int u, int v) const;
    DistanceMatrix to_distance_matrix() const;
    WeightedGraph to_graph() const;
};

struct MuOneTwo {
    double value = 0.0;
    std::vector<int> witness;
};

// Accepts exactly the complete graphs with weights in {1,2}; otherwise
// raises InfeasibleError naming the offending pair.
OneTwoInstance validate_one_two(const WeightedGraph& g);

// Exact max-min T-join value of a (1,2)-graph. Even n: n - m1 where m1 is
// the maximum matching on the weight-1 subgraph, witness = all vertices.
// Odd n: best even-case value over single-vertex removals; ties remove the
// smallest index.
MuOneTwo mu_12(const OneTwoInstance& inst);

}  // namespace tjoin
