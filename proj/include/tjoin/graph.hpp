#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tjoin/common.hpp"

namespace tjoin {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 0.0;
};

// Undirected vertex-labeled graph with strictly positive edge weights.
// Invariants: no self-loops, no duplicate undirected edges, indices in [0, n).
struct WeightedGraph {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    std::optional<double> edge_weight(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_weight(u, v).has_value(); }
    bool is_complete() const;
    double total_weight() const;

    // Sorted adjacency: per vertex, (neighbor, weight) ascending by neighbor.
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;
};

// Symmetric positive metric over n vertices (zero diagonal, triangle
// inequality within kTol). Operations that require a true metric call
// verify_metric first.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> d;  // row-major n*n

    static DistanceMatrix zero(int n);
    double at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }
};

struct MetricViolation {
    enum class Kind { Diagonal, Symmetry, Positivity, Triangle };
    Kind kind = Kind::Triangle;
    // Triangle: d(i,j) > d(i,k) + d(k,j); other kinds use i, j only.
    int i = 0, j = 0, k = 0;
    double amount = 0.0;  // size of the violation

    std::string describe() const;
};

struct BridgeContraction {
    WeightedGraph contracted;            // bridge-free
    double bridge_weight = 0.0;          // sum of contracted bridge weights
    std::vector<int> vertex_map;         // original vertex -> contracted vertex
    std::vector<Edge> bridges;           // the contracted edges, original indices
};

// Parses the edge-list text format: one record per line `label,label,weight`,
// `#` comments ignored, optional `u,v,w` header. Errors carry line numbers.
WeightedGraph load_edge_list(const std::string& text);

// Same format with an integer third column interpreted as a similarity count.
WeightedGraph load_similarity_list(const std::string& text);

// Inverse of load_edge_list; weights printed with round-trip precision.
std::string serialize_edge_list(const WeightedGraph& g);

// Turns similarity counts into distances: weight 1/(c+1) per listed pair.
WeightedGraph similarity_to_distance(
    const std::vector<std::tuple<std::string, std::string, long long>>& counts);

bool is_connected(const WeightedGraph& g);

// All-pairs shortest-path distances of a connected graph.
DistanceMatrix metric_closure(const WeightedGraph& g);

// Diagnostic: empty iff d satisfies all metric axioms within kTol.
std::vector<MetricViolation> verify_metric(const DistanceMatrix& d);

// Bridges in input order of edges (lowpoint DFS).
std::vector<Edge> find_bridges(const WeightedGraph& g);

// Merges both endpoints of every bridge; the result is 2-edge-connected.
BridgeContraction contract_bridges(const WeightedGraph& g);

}  // namespace tjoin
