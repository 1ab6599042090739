#include "tjoin/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tjoin/matching.hpp"

namespace tjoin {

namespace {

// Dense-graph Prim from vertex 0; ties toward the smaller index.
std::vector<std::pair<int, int>> minimum_spanning_tree(const DistanceMatrix& d) {
    const int n = d.n;
    std::vector<char> in_tree(n, 0);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);
    best[0] = 0.0;
    std::vector<std::pair<int, int>> edges;
    for (int step = 0; step < n; ++step) {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (!in_tree[v] && (u < 0 || best[v] < best[u])) u = v;
        in_tree[u] = 1;
        if (parent[u] >= 0) edges.emplace_back(parent[u], u);
        for (int v = 0; v < n; ++v)
            if (!in_tree[v] && d.at(u, v) < best[v]) {
                best[v] = d.at(u, v);
                parent[v] = u;
            }
    }
    return edges;
}

}  // namespace

double tour_cost(const DistanceMatrix& d, const std::vector<int>& order) {
    double c = 0.0;
    for (size_t i = 0; i < order.size(); ++i)
        c += d.at(order[i], order[(i + 1) % order.size()]);
    return c;
}

bool is_valid_tour(const DistanceMatrix& d, const Tour& tour) {
    if (static_cast<int>(tour.order.size()) != d.n) return false;
    std::vector<char> seen(d.n, 0);
    for (int v : tour.order) {
        if (v < 0 || v >= d.n || seen[v]) return false;
        seen[v] = 1;
    }
    return std::abs(tour.cost - tour_cost(d, tour.order)) <= kTol;
}

Tour christofides(const DistanceMatrix& d) {
    if (d.n < 3) throw std::invalid_argument("christofides requires n >= 3");
    std::vector<MetricViolation> violations = verify_metric(d);
    if (!violations.empty())
        throw std::invalid_argument("christofides requires a metric: " +
                                    violations.front().describe());

    std::vector<std::pair<int, int>> mst = minimum_spanning_tree(d);
    std::vector<int> degree(d.n, 0);
    for (auto [u, v] : mst) {
        ++degree[u];
        ++degree[v];
    }
    std::vector<int> odd;
    for (int v = 0; v < d.n; ++v)
        if (degree[v] % 2 == 1) odd.push_back(v);

    Matching matching = min_weight_perfect_matching(d, odd);

    // Multigraph adjacency with usage counts for the Euler walk.
    std::vector<std::map<int, int>> adj(d.n);
    auto add = [&](int u, int v) {
        ++adj[u][v];
        ++adj[v][u];
    };
    for (auto [u, v] : mst) add(u, v);
    for (auto [u, v] : matching.pairs) add(u, v);

    // Hierholzer, smallest available neighbor first.
    std::vector<int> circuit, stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        if (adj[u].empty()) {
            circuit.push_back(u);
            stack.pop_back();
        } else {
            auto it = adj[u].begin();
            int v = it->first;
            if (--it->second == 0) adj[u].erase(it);
            auto back = adj[v].find(u);
            if (--back->second == 0) adj[v].erase(back);
            stack.push_back(v);
        }
    }

    Tour tour;
    std::vector<char> visited(d.n, 0);
    for (int v : circuit)
        if (!visited[v]) {
            visited[v] = 1;
            tour.order.push_back(v);
        }
    tour.cost = tour_cost(d, tour.order);
    return tour;
}

Tour brute_force_tsp(const DistanceMatrix& d) {
    if (d.n < 3) throw std::invalid_argument("brute_force_tsp requires n >= 3");
    if (d.n > 10) throw std::invalid_argument("brute_force_tsp supports at most 10 vertices");
    std::vector<int> perm(d.n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    Tour best;
    best.cost = std::numeric_limits<double>::infinity();
    do {
        std::vector<int> order{0};
        order.insert(order.end(), perm.begin(), perm.end());
        double c = tour_cost(d, order);
        if (c < best.cost) {
            best.cost = c;
            best.order = order;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double tsp_half_upper_bound(const DistanceMatrix& d) { return christofides(d).cost / 2.0; }

}  // namespace tjoin
