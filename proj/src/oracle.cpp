#include "tjoin/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace tjoin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> mask_to_vertices(unsigned mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

// dp[mask] = minimum pairing cost of the vertices in mask (even popcount).
std::vector<double> pairing_table(const DistanceMatrix& d) {
    const int n = d.n;
    const unsigned full = (1u << n) - 1;
    std::vector<double> dp(full + 1, kInf);
    dp[0] = 0.0;
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        int i = std::countr_zero(mask);
        double best = kInf;
        for (int j = i + 1; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            double c = d.at(i, j) + dp[mask ^ (1u << i) ^ (1u << j)];
            if (c < best) best = c;
        }
        dp[mask] = best;
    }
    return dp;
}

// Picks the better (value, subset) pair: larger value wins; near-ties fall
// back to the lexicographically smaller sorted vertex list.
void consider(MuResult& best, double value, unsigned mask, int n) {
    if (value > best.value + kTol) {
        best.value = value;
        best.subset = mask_to_vertices(mask, n);
    } else if (value > best.value - kTol) {
        std::vector<int> cand = mask_to_vertices(mask, n);
        if (!best.subset.empty() && cand < best.subset) best.subset = std::move(cand);
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_simple_cycles(const WeightedGraph& g) {
    if (g.edges.size() > 20)
        throw std::invalid_argument("cycle enumeration supports at most 20 edges");
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge index)
    for (size_t i = 0; i < g.edges.size(); ++i) {
        adj[g.edges[i].u].emplace_back(g.edges[i].v, static_cast<int>(i));
        adj[g.edges[i].v].emplace_back(g.edges[i].u, static_cast<int>(i));
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    std::vector<std::vector<int>> cycles;
    std::vector<char> on_path(g.n, 0);
    std::vector<int> path_vertices, path_edges;

    // Each cycle is found once: rooted at its smallest vertex, traversed in
    // the direction whose second vertex is smaller than its last.
    auto dfs = [&](auto&& self, int v, int start) -> void {
        for (auto [to, eid] : adj[v]) {
            if (to == start && path_vertices.size() >= 3) {
                if (path_vertices[1] < path_vertices.back()) {
                    std::vector<int> cyc = path_edges;
                    cyc.push_back(eid);
                    cycles.push_back(std::move(cyc));
                }
            } else if (to > start && !on_path[to]) {
                on_path[to] = 1;
                path_vertices.push_back(to);
                path_edges.push_back(eid);
                self(self, to, start);
                path_edges.pop_back();
                path_vertices.pop_back();
                on_path[to] = 0;
            }
        }
    };
    for (int s = 0; s < g.n; ++s) {
        on_path.assign(g.n, 0);
        on_path[s] = 1;
        path_vertices = {s};
        path_edges.clear();
        dfs(dfs, s, s);
    }
    return cycles;
}

bool is_valid_edge_set(const WeightedGraph& g, const std::vector<int>& edge_indices) {
    std::vector<std::vector<int>> cycles = enumerate_simple_cycles(g);
    std::vector<char> chosen(g.edges.size(), 0);
    for (int e : edge_indices) {
        if (e < 0 || e >= static_cast<int>(g.edges.size()))
            throw std::invalid_argument("edge index out of range");
        chosen[e] = 1;
    }
    for (const auto& cyc : cycles) {
        double w_cycle = 0.0, w_inside = 0.0;
        for (int e : cyc) {
            w_cycle += g.edges[e].w;
            if (chosen[e]) w_inside += g.edges[e].w;
        }
        if (2.0 * w_inside > w_cycle + kTol) return false;
    }
    return true;
}

ValidEdgeSet brute_force_max_valid_set(const WeightedGraph& g) {
    const int m = static_cast<int>(g.edges.size());
    if (m > 16) throw std::invalid_argument("brute_force_max_valid_set supports at most 16 edges");
    std::vector<std::vector<int>> cycles = enumerate_simple_cycles(g);

    struct CycleMask {
        unsigned mask = 0;
        double weight = 0.0;
    };
    std::vector<CycleMask> cms;
    cms.reserve(cycles.size());
    for (const auto& cyc : cycles) {
        CycleMask cm;
        for (int e : cyc) {
            cm.mask |= 1u << e;
            cm.weight += g.edges[e].w;
        }
        cms.push_back(cm);
    }

    double best_weight = -1.0;
    std::vector<int> best_edges;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        double w = 0.0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) w += g.edges[e].w;
        bool valid = true;
        for (const CycleMask& cm : cms) {
            double inside = 0.0;
            unsigned overlap = cm.mask & mask;
            while (overlap) {
                int e = std::countr_zero(overlap);
                inside += g.edges[e].w;
                overlap &= overlap - 1;
            }
            if (2.0 * inside > cm.weight + kTol) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        if (w > best_weight + kTol) {
            best_weight = w;
            best_edges = mask_to_vertices(mask, m);
        } else if (w > best_weight - kTol) {
            std::vector<int> cand = mask_to_vertices(mask, m);
            if (cand < best_edges) best_edges = std::move(cand);
        }
    }

    ValidEdgeSet out;
    out.edge_indices = best_edges;
    out.weight = 0.0;
    std::vector<int> degree(g.n, 0);
    for (int e : out.edge_indices) {
        out.weight += g.edges[e].w;
        ++degree[g.edges[e].u];
        ++degree[g.edges[e].v];
    }
    for (int v = 0; v < g.n; ++v)
        if (degree[v] % 2 == 1) out.odd_vertices.push_back(v);
    return out;
}

MuResult brute_force_mu(const DistanceMatrix& d) {
    if (d.n > 12) throw std::invalid_argument("brute_force_mu supports at most 12 vertices");
    MuResult best;  // the empty subset has matching cost 0
    if (d.n == 0) return best;
    std::vector<double> dp = pairing_table(d);
    const unsigned full = (1u << d.n) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        consider(best, dp[mask], mask, d.n);
    }
    return best;
}

MuResult brute_force_mu_2k(const DistanceMatrix& d, int k) {
    if (d.n > 12) throw std::invalid_argument("brute_force_mu_2k supports at most 12 vertices");
    if (k < 1 || 2 * k > d.n) throw std::invalid_argument("brute_force_mu_2k: invalid k");
    std::vector<double> dp = pairing_table(d);
    const unsigned full = (1u << d.n) - 1;
    MuResult best;
    best.value = -kInf;
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) != 2 * k) continue;
        if (best.subset.empty()) {
            best.value = dp[mask];
            best.subset = mask_to_vertices(mask, d.n);
        } else {
            consider(best, dp[mask], mask, d.n);
        }
    }
    return best;
}

EquivalenceReport check_formulation_equivalence(const WeightedGraph& g) {
    if (g.edges.size() > 16 || g.n > 10)
        throw std::invalid_argument("check_formulation_equivalence limits: |E| <= 16, n <= 10");
    if (!is_connected(g))
        throw std::invalid_argument("check_formulation_equivalence requires a connected graph");

    EquivalenceReport report;
    ValidEdgeSet best = brute_force_max_valid_set(g);
    DistanceMatrix closure = metric_closure(g);
    MuResult mu = brute_force_mu(closure);

    report.max_valid_weight = best.weight;
    report.mu_value = mu.value;
    report.odd_vertices = best.odd_vertices;
    report.odd_matching_cost = brute_force_matching(closure, best.odd_vertices).cost;
    report.consistent = std::abs(report.max_valid_weight - report.mu_value) <= kTol &&
                        std::abs(report.odd_matching_cost - report.max_valid_weight) <= kTol;
    return report;
}

}  // namespace tjoin
