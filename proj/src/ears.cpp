#include "tjoin/ears.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace tjoin {

double Ear::total_weight() const {
    double s = 0.0;
    for (double w : edge_weights) s += w;
    return s;
}

EarDecomposition dfs_ear_decomposition(const WeightedGraph& g, int root) {
    if (root < 0 || root >= std::max(g.n, 1))
        throw std::invalid_argument("dfs_ear_decomposition: bad root");
    if (!is_connected(g)) throw std::invalid_argument("dfs_ear_decomposition: graph disconnected");
    if (!find_bridges(g).empty())
        throw std::invalid_argument(
            "dfs_ear_decomposition: graph has bridges; contract them first");

    EarDecomposition dec;
    if (g.n <= 1) return dec;  // a single vertex decomposes into no ears

    auto adj = g.adjacency();
    std::vector<int> parent(g.n, -1), tin(g.n, -1), preorder;
    std::vector<double> parent_weight(g.n, 0.0);
    // back_edges[a]: (descendant, weight) anchored at ancestor a.
    std::vector<std::vector<std::pair<int, double>>> back_edges(g.n);

    int timer = 0;
    std::function<void(int)> dfs = [&](int u) {
        tin[u] = timer++;
        preorder.push_back(u);
        for (auto [v, w] : adj[u]) {
            if (tin[v] < 0) {
                parent[v] = u;
                parent_weight[v] = w;
                dfs(v);
            } else if (tin[v] < tin[u] && v != parent[u]) {
                back_edges[v].emplace_back(u, w);
            }
        }
    };
    dfs(root);

    std::vector<char> marked(g.n, 0);
    marked[root] = 1;
    for (int anchor : preorder) {
        std::sort(back_edges[anchor].begin(), back_edges[anchor].end());
        for (auto [desc, w] : back_edges[anchor]) {
            Ear ear;
            ear.vertices = {anchor, desc};
            ear.edge_weights = {w};
            int x = desc;
            while (!marked[x]) {
                marked[x] = 1;
                ear.edge_weights.push_back(parent_weight[x]);
                x = parent[x];
                ear.vertices.push_back(x);
            }
            if (ear.vertices.back() == anchor) ear.vertices.pop_back();  // cycle form
            ear.is_trivial = ear.edge_weights.size() == 1;
            dec.ears.push_back(std::move(ear));
        }
    }
    check_ear_decomposition(dec, g);
    return dec;
}

EarDecomposition hamiltonian_first_decomposition(const DistanceMatrix& d, const Tour& tour) {
    if (d.n < 3) throw std::invalid_argument("hamiltonian_first_decomposition requires n >= 3");
    if (!is_valid_tour(d, tour))
        throw std::invalid_argument("hamiltonian_first_decomposition: tour is not Hamiltonian");

    EarDecomposition dec;
    Ear cycle;
    cycle.vertices = tour.order;
    for (int i = 0; i < d.n; ++i)
        cycle.edge_weights.push_back(d.at(tour.order[i], tour.order[(i + 1) % d.n]));
    dec.ears.push_back(std::move(cycle));

    std::set<std::pair<int, int>> used;
    for (int i = 0; i < d.n; ++i)
        used.insert(std::minmax(tour.order[i], tour.order[(i + 1) % d.n]));
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v) {
            if (used.count({u, v})) continue;
            Ear e;
            e.vertices = {u, v};
            e.edge_weights = {d.at(u, v)};
            e.is_trivial = true;
            dec.ears.push_back(std::move(e));
        }
    return dec;
}

namespace {

double ear_max_exact(const std::vector<double>& weights, double cap) {
    const int m = static_cast<int>(weights.size());
    const int a = m / 2;
    auto sums_of = [&](int lo, int hi) {
        std::vector<double> sums{0.0};
        sums.reserve(1u << (hi - lo));
        for (int i = lo; i < hi; ++i) {
            size_t count = sums.size();
            for (size_t s = 0; s < count; ++s) sums.push_back(sums[s] + weights[i]);
        }
        return sums;
    };
    std::vector<double> left = sums_of(0, a);
    std::vector<double> right = sums_of(a, m);
    std::sort(right.begin(), right.end());

    double best = 0.0;
    for (double x : left) {
        if (x > cap) continue;
        auto it = std::upper_bound(right.begin(), right.end(), cap - x);
        if (it != right.begin()) best = std::max(best, x + *(it - 1));
    }
    return best;
}

// Trim-based subset-sum FPTAS; returned sums are exact values of feasible
// subsets, so the result never overshoots the true optimum.
double ear_max_approx(const std::vector<double>& weights, double cap, double eps) {
    const double delta = eps / (2.0 * static_cast<double>(weights.size()));
    std::vector<double> sums{0.0};
    for (double w : weights) {
        std::vector<double> merged;
        merged.reserve(sums.size() * 2);
        size_t i = 0, j = 0;
        while (i < sums.size() || j < sums.size()) {
            double a = i < sums.size() ? sums[i] : std::numeric_limits<double>::infinity();
            double b = j < sums.size() ? sums[j] + w : std::numeric_limits<double>::infinity();
            if (a <= b) {
                merged.push_back(a);
                ++i;
            } else {
                merged.push_back(b);
                ++j;
            }
        }
        std::vector<double> trimmed;
        for (double s : merged) {
            if (s > cap) break;
            if (trimmed.empty() || s > trimmed.back() * (1.0 + delta)) trimmed.push_back(s);
        }
        sums = std::move(trimmed);
    }
    return sums.empty() ? 0.0 : sums.back();
}

}  // namespace

double ear_max(const std::vector<double>& edge_weights, std::optional<double> epsilon) {
    if (edge_weights.empty()) throw std::invalid_argument("ear_max: empty ear");
    double total = 0.0;
    for (double w : edge_weights) {
        if (w <= 0.0) throw std::invalid_argument("ear_max: non-positive weight");
        total += w;
    }
    double half = total / 2.0;
    double cap = half + 1e-12 * std::max(1.0, half);  // admit exact-half subsets
    if (!epsilon) {
        if (edge_weights.size() > 40)
            throw std::invalid_argument(
                "ear_max: exact mode supports at most 40 edges; pass epsilon");
        return ear_max_exact(edge_weights, cap);
    }
    if (*epsilon <= 0.0 || *epsilon >= 1.0)
        throw std::invalid_argument("ear_max: epsilon must lie in (0,1)");
    return ear_max_approx(edge_weights, cap, *epsilon);
}

EarBound ear_upper_bound(const WeightedGraph& g, EarStrategy strategy,
                         std::optional<double> epsilon, int dfs_root) {
    if (!is_connected(g)) throw std::invalid_argument("ear_upper_bound: graph disconnected");

    BridgeContraction bc = contract_bridges(g);
    EarBound out;
    out.bridge_weight = bc.bridge_weight;

    if (bc.contracted.n <= 1) {  // a tree contracts to a point
        out.bound = bc.bridge_weight;
        out.strategy = strategy == EarStrategy::Dfs ? "dfs" : "hamiltonian-first";
        return out;
    }

    if (strategy == EarStrategy::Dfs) {
        out.decomposition = dfs_ear_decomposition(bc.contracted, dfs_root);
        char buf[32];
        std::snprintf(buf, sizeof buf, "dfs[root=%d]", dfs_root);
        out.strategy = buf;
    } else {
        if (!g.is_complete() || g.n < 3)
            throw std::invalid_argument(
                "ear_upper_bound: hamiltonian-first requires a complete graph with n >= 3");
        DistanceMatrix d = DistanceMatrix::zero(g.n);
        for (const Edge& e : g.edges) {
            d.at(e.u, e.v) = e.w;
            d.at(e.v, e.u) = e.w;
        }
        Tour tour = christofides(d);
        out.decomposition = hamiltonian_first_decomposition(d, tour);
        out.strategy = "hamiltonian-first";
    }

    double sum = 0.0;
    for (const Ear& ear : out.decomposition.ears) {
        double value = ear_max(ear.edge_weights, epsilon);
        if (epsilon) value /= 1.0 - *epsilon;  // keep the aggregate certified
        sum += value;
    }
    out.bound = sum + bc.bridge_weight;
    return out;
}

EarBound best_ear_upper_bound(const WeightedGraph& g, std::optional<double> epsilon) {
    if (!is_connected(g)) throw std::invalid_argument("best_ear_upper_bound: graph disconnected");
    BridgeContraction bc = contract_bridges(g);

    std::optional<EarBound> best;
    auto offer = [&](EarBound candidate) {
        if (!best || candidate.bound < best->bound - kTol) best = std::move(candidate);
    };
    int roots = std::max(bc.contracted.n, 1);
    if (bc.contracted.n <= 1) roots = 1;
    for (int r = 0; r < roots; ++r) offer(ear_upper_bound(g, EarStrategy::Dfs, epsilon, r));
    if (g.is_complete() && g.n >= 3) {
        DistanceMatrix d = DistanceMatrix::zero(g.n);
        for (const Edge& e : g.edges) {
            d.at(e.u, e.v) = e.w;
            d.at(e.v, e.u) = e.w;
        }
        if (verify_metric(d).empty())
            offer(ear_upper_bound(g, EarStrategy::HamiltonianFirst, epsilon));
    }
    return *best;
}

std::string serialize_ears(const EarDecomposition& dec, const std::vector<std::string>& labels) {
    std::string out;
    char buf[64];
    for (const Ear& ear : dec.ears) {
        out += ear.is_cycle() ? "cycle:" : (ear.is_trivial ? "edge:" : "path:");
        for (int v : ear.vertices) {
            out += ' ';
            out += labels[v];
        }
        out += " |";
        for (double w : ear.edge_weights) {
            std::snprintf(buf, sizeof buf, " %.17g", w);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void check_ear_decomposition(const EarDecomposition& dec, const WeightedGraph& g) {
    if (dec.ears.empty()) {
        if (!g.edges.empty()) throw std::logic_error("ear decomposition misses all edges");
        return;
    }
    if (!dec.ears.front().is_cycle()) throw std::logic_error("first ear is not a cycle");

    std::map<std::pair<int, int>, double> remaining;
    for (const Edge& e : g.edges) remaining[std::minmax(e.u, e.v)] = e.w;

    std::vector<char> in_decomposition(g.n, 0);
    bool first = true;
    for (const Ear& ear : dec.ears) {
        if (ear.vertices.empty() || ear.edge_weights.empty())
            throw std::logic_error("empty ear");
        size_t expected = ear.is_cycle() ? ear.vertices.size() : ear.vertices.size() - 1;
        if (ear.edge_weights.size() != expected)
            throw std::logic_error("ear weight count does not match its vertex sequence");

        int front = ear.vertices.front(), back = ear.vertices.back();
        if (!first) {
            if (ear.is_cycle()) {
                if (!in_decomposition[front])
                    throw std::logic_error("cycle ear not anchored to earlier ears");
            } else if (!in_decomposition[front] || !in_decomposition[back]) {
                throw std::logic_error("ear endpoint not contained in earlier ears");
            }
        }
        size_t interior_lo = first ? 0 : 1;
        size_t interior_hi = ear.is_cycle() ? ear.vertices.size() : ear.vertices.size() - 1;
        for (size_t i = interior_lo; i < interior_hi; ++i)
            if (!first && in_decomposition[ear.vertices[i]])
                throw std::logic_error("interior ear vertex already present");

        for (size_t i = 0; i < ear.edge_weights.size(); ++i) {
            int u = ear.vertices[i];
            int v = ear.vertices[(i + 1) % ear.vertices.size()];
            auto it = remaining.find(std::minmax(u, v));
            if (it == remaining.end())
                throw std::logic_error("ear edge absent from graph or used twice");
            if (std::abs(it->second - ear.edge_weights[i]) > kTol)
                throw std::logic_error("ear edge weight mismatch");
            remaining.erase(it);
        }
        for (int v : ear.vertices) in_decomposition[v] = 1;
        first = false;
    }
    if (!remaining.empty()) throw std::logic_error("ear decomposition does not cover all edges");
}

}  // namespace tjoin
