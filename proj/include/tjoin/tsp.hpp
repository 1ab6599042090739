#pragma once

#include <vector>

#include "tjoin/graph.hpp"

namespace tjoin {

// Cyclic vertex permutation; cost includes the closing edge.
struct Tour {
    std::vector<int> order;
    double cost = 0.0;
};

// MST + exact matching on odd-degree vertices + Euler circuit + shortcut.
// Requires a metric (verify_metric must pass) and n >= 3.
Tour christofides(const DistanceMatrix& d);

// Exact optimum by permutation enumeration, 3 <= n <= 10.
Tour brute_force_tsp(const DistanceMatrix& d);

// christofides(d).cost / 2; an upper bound for mu and every mu_2k.
double tsp_half_upper_bound(const DistanceMatrix& d);

// Visits every vertex exactly once and the cost matches within kTol.
bool is_valid_tour(const DistanceMatrix& d, const Tour& tour);

double tour_cost(const DistanceMatrix& d, const std::vector<int>& order);

}  // namespace tjoin
