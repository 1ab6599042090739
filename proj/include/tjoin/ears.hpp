#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tjoin/graph.hpp"
#include "tjoin/tsp.hpp"

namespace tjoin {

// One ear: a path whose endpoints already belong to the decomposition, or a
// cycle (closing edge implied, so |edge_weights| == |vertices|).
struct Ear {
    std::vector<int> vertices;
    std::vector<double> edge_weights;
    bool is_trivial = false;

    bool is_cycle() const { return edge_weights.size() == vertices.size(); }
    double total_weight() const;
};

struct EarDecomposition {
    std::vector<Ear> ears;  // first ear is a cycle; later ears attach to it
};

enum class EarStrategy { Dfs, HamiltonianFirst };

struct EarBound {
    double bound = 0.0;
    EarDecomposition decomposition;
    double bridge_weight = 0.0;
    std::string strategy;  // e.g. "dfs[root=2]" or "hamiltonian-first"
};

// Chain decomposition from a depth-first tree; each non-tree edge closes one
// ear. Requires a connected, bridge-free graph. Deterministic given the
// sorted adjacency order.
EarDecomposition dfs_ear_decomposition(const WeightedGraph& g, int root = 0);

// First ear = the tour as a cycle; every other edge of the complete graph
// becomes a trivial ear.
EarDecomposition hamiltonian_first_decomposition(const DistanceMatrix& d, const Tour& tour);

// Largest subset sum of the ear's weights not exceeding half the total.
// Exact (meet-in-the-middle) when epsilon is absent, |weights| <= 40;
// otherwise a trim-based FPTAS returning v with (1-eps) max <= v <= max.
double ear_max(const std::vector<double>& edge_weights, std::optional<double> epsilon = {});

// Contract bridges, decompose the 2-edge-connected remainder, and report
// sum of ear_max values plus the bridge weight. With exact knapsack (and,
// in epsilon mode, with the 1/(1-eps) inflation applied here) the result is
// a certified upper bound on mu.
EarBound ear_upper_bound(const WeightedGraph& g, EarStrategy strategy,
                         std::optional<double> epsilon = {}, int dfs_root = 0);

// Minimum over DFS decompositions from every root plus the
// hamiltonian-first decomposition when the graph is a complete metric.
EarBound best_ear_upper_bound(const WeightedGraph& g, std::optional<double> epsilon = {});

// One ear per line: vertex labels then edge weights.
std::string serialize_ears(const EarDecomposition& dec, const std::vector<std::string>& labels);

// Throws std::logic_error if the decomposition violates its invariants
// (edge-disjoint cover of g, endpoint containment, first ear a cycle).
void check_ear_decomposition(const EarDecomposition& dec, const WeightedGraph& g);

}  // namespace tjoin
