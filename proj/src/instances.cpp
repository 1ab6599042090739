#include "tjoin/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace tjoin {

namespace {

std::vector<std::string> indexed_labels(const char* prefix, int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

void add_complete_edges(WeightedGraph& g, const std::vector<double>& position) {
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            g.edges.push_back({i, j, std::abs(position[i] - position[j])});
}

}  // namespace

WeightedGraph make_line_instance(int pairs, double epsilon) {
    if (pairs < 1) throw std::invalid_argument("make_line_instance: pairs must be >= 1");
    if (epsilon <= 0.0) throw std::invalid_argument("make_line_instance: epsilon must be > 0");
    WeightedGraph g;
    g.n = 2 * pairs;
    g.labels = indexed_labels("p", g.n);
    std::vector<double> position(g.n);
    for (int i = 0; i < pairs; ++i) {
        position[2 * i] = static_cast<double>(i);
        position[2 * i + 1] = static_cast<double>(i) + epsilon;
    }
    add_complete_edges(g, position);
    return g;
}

WeightedGraph make_unit_complete(int n) {
    if (n < 2) throw std::invalid_argument("make_unit_complete: n must be >= 2");
    WeightedGraph g;
    g.n = n;
    g.labels = indexed_labels("v", n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, 1.0});
    return g;
}

WeightedGraph make_figure1(double epsilon) {
    if (epsilon <= 0.0) throw std::invalid_argument("make_figure1: epsilon must be > 0");
    WeightedGraph g;
    g.n = 8;
    for (int i = 1; i <= 8; ++i) g.labels.push_back("v" + std::to_string(i));
    const double cycle_weights[7] = {5, 2, 1, 2, 3, 1, 2};
    for (int i = 0; i < 7; ++i) g.edges.push_back({i, (i + 1) % 7, cycle_weights[i]});
    g.edges.push_back({0, 7, 3.0 + epsilon});
    g.edges.push_back({7, 3, 2.0 + epsilon});
    return g;
}

WeightedGraph make_one_two_graph(int n, double p1, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("make_one_two_graph: n must be >= 2");
    if (p1 < 0.0 || p1 > 1.0) throw std::invalid_argument("make_one_two_graph: p1 outside [0,1]");
    Rng rng(seed);
    WeightedGraph g;
    g.n = n;
    g.labels = indexed_labels("v", n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.edges.push_back({i, j, rng.uniform() <= p1 ? 1.0 : 2.0});
    return g;
}

DistanceMatrix make_random_metric(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("make_random_metric: n must be >= 2");
    Rng rng(seed);
    WeightedGraph g;
    g.n = n;
    g.labels = indexed_labels("v", n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, rng.uniform(0.1, 1.0)});
    return metric_closure(g);
}

WeightedGraph make_random_connected(int n, int max_edges, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("make_random_connected: n must be >= 2");
    const int all_pairs = n * (n - 1) / 2;
    max_edges = std::min(max_edges, all_pairs);
    if (max_edges < n - 1) throw std::invalid_argument("make_random_connected: max_edges too small");

    Rng rng(seed);
    WeightedGraph g;
    g.n = n;
    g.labels = indexed_labels("v", n);
    std::set<std::pair<int, int>> used;
    for (int v = 1; v < n; ++v) {
        int parent = rng.uniform_int(0, v - 1);
        used.insert(std::minmax(parent, v));
        g.edges.push_back({parent, v, rng.uniform()});
    }
    int extra = rng.uniform_int(0, max_edges - (n - 1));
    while (extra > 0) {
        int u = rng.uniform_int(0, n - 1);
        int v = rng.uniform_int(0, n - 1);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!used.insert(key).second) continue;
        g.edges.push_back({key.first, key.second, rng.uniform()});
        --extra;
    }
    return g;
}

WeightedGraph make_random_two_edge_connected(int n, int max_edges, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("make_random_two_edge_connected: n must be >= 3");
    const int all_pairs = n * (n - 1) / 2;
    max_edges = std::min(max_edges, all_pairs);
    if (max_edges < n)
        throw std::invalid_argument("make_random_two_edge_connected: max_edges too small");

    Rng rng(seed);
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(cycle[i], cycle[rng.uniform_int(0, i)]);

    WeightedGraph g;
    g.n = n;
    g.labels = indexed_labels("v", n);
    std::set<std::pair<int, int>> used;
    for (int i = 0; i < n; ++i) {
        auto key = std::minmax(cycle[i], cycle[(i + 1) % n]);
        used.insert(key);
        g.edges.push_back({key.first, key.second, rng.uniform()});
    }
    int extra = rng.uniform_int(0, max_edges - n);
    while (extra > 0) {
        int u = rng.uniform_int(0, n - 1);
        int v = rng.uniform_int(0, n - 1);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!used.insert(key).second) continue;
        g.edges.push_back({key.first, key.second, rng.uniform()});
        --extra;
    }
    return g;
}

WeightedGraph make_random_bridged(std::uint64_t seed) {
    Rng rng(seed);
    // Blob sizes: 1 or a small cycle; total n <= 7 with the bridge between.
    static const std::pair<int, int> shapes[] = {{1, 1}, {3, 1}, {4, 1}, {5, 1},
                                                 {3, 3}, {4, 3}, {3, 4}, {6, 1}};
    auto [na, nb] = shapes[rng.uniform_int(0, 7)];

    WeightedGraph g;
    g.n = na + nb;
    g.labels = indexed_labels("v", g.n);
    auto add_blob = [&](int offset, int size) {
        if (size < 3) return;
        for (int i = 0; i < size; ++i)
            g.edges.push_back({offset + i, offset + (i + 1) % size, rng.uniform()});
        if (size >= 4 && rng.uniform_int(0, 1) == 1)
            g.edges.push_back({offset, offset + 2, rng.uniform()});
    };
    add_blob(0, na);
    add_blob(na, nb);
    g.edges.push_back({rng.uniform_int(0, na - 1), na + rng.uniform_int(0, nb - 1),
                       rng.uniform()});
    return g;
}

WeightedGraph with_unit_weights(const WeightedGraph& g) {
    WeightedGraph out = g;
    for (Edge& e : out.edges) e.w = 1.0;
    return out;
}

}  // namespace tjoin
