#pragma once

#include <cstdint>
#include <vector>

#include "tjoin/graph.hpp"
#include "tjoin/one_two.hpp"

namespace tjoin {

// Deterministic, platform-independent generator (splitmix64 core).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0,1].
    double uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// 2n points on a line at i and i+epsilon for i = 0..n-1, as a complete graph.
WeightedGraph make_line_instance(int pairs, double epsilon);

// Complete graph with all weights 1.
WeightedGraph make_unit_complete(int n);

// The 8-vertex gap gadget: a 7-cycle with weights 5,2,1,2,3,1,2 plus a chord
// path through a fresh vertex with weights 3+epsilon and 2+epsilon.
WeightedGraph make_figure1(double epsilon);

// Complete graph whose edges get weight 1 with probability p1, else 2.
WeightedGraph make_one_two_graph(int n, double p1, std::uint64_t seed);

// Random metric: complete graph with uniform (0.1, 1] weights, metric-closed.
DistanceMatrix make_random_metric(int n, std::uint64_t seed);

// Random connected graph: spanning tree plus extra edges, |E| <= max_edges,
// weights uniform in (0,1].
WeightedGraph make_random_connected(int n, int max_edges, std::uint64_t seed);

// Random 2-edge-connected graph: a Hamiltonian cycle plus chords.
WeightedGraph make_random_two_edge_connected(int n, int max_edges, std::uint64_t seed);

// Random connected graph guaranteed to contain at least one bridge
// (two blobs joined by a bridge edge), n <= 7.
WeightedGraph make_random_bridged(std::uint64_t seed);

// Copy with every edge weight set to 1.
WeightedGraph with_unit_weights(const WeightedGraph& g);

}  // namespace tjoin
