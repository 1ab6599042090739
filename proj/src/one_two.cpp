#include "tjoin/one_two.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tjoin/matching.hpp"

namespace tjoin {

double OneTwoInstance::weight(int u, int v) const {
    auto key = std::minmax(u, v);
    return std::binary_search(weight_one.begin(), weight_one.end(),
                              std::make_pair(key.first, key.second))
               ? 1.0
               : 2.0;
}

DistanceMatrix OneTwoInstance::to_distance_matrix() const {
    DistanceMatrix d = DistanceMatrix::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d.at(i, j) = weight(i, j);
            d.at(j, i) = d.at(i, j);
        }
    return d;
}

WeightedGraph OneTwoInstance::to_graph() const {
    WeightedGraph g;
    g.n = n;
    g.labels = labels;
    if (g.labels.empty())
        for (int i = 0; i < n; ++i) g.labels.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, weight(i, j)});
    return g;
}

OneTwoInstance validate_one_two(const WeightedGraph& g) {
    OneTwoInstance inst;
    inst.n = g.n;
    inst.labels = g.labels;
    std::set<std::pair<int, int>> present;
    for (const Edge& e : g.edges) {
        if (e.w != 1.0 && e.w != 2.0)
            throw InfeasibleError("edge " + g.labels[e.u] + "," + g.labels[e.v] +
                                  " has weight outside {1,2}");
        present.insert(std::minmax(e.u, e.v));
        if (e.w == 1.0) {
            auto key = std::minmax(e.u, e.v);
            inst.weight_one.emplace_back(key.first, key.second);
        }
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!present.count({u, v}))
                throw InfeasibleError("graph is not complete: missing pair " + g.labels[u] + "," +
                                      g.labels[v]);
    std::sort(inst.weight_one.begin(), inst.weight_one.end());
    return inst;
}

namespace {

// Even-case value on the instance restricted to `kept`: n' - m1 with m1 the
// maximum matching of the weight-1 subgraph.
double even_case_value(const OneTwoInstance& inst, const std::vector<int>& kept) {
    std::vector<int> local(inst.n, -1);
    for (size_t i = 0; i < kept.size(); ++i) local[kept[i]] = static_cast<int>(i);
    WeightedGraph ones;
    ones.n = static_cast<int>(kept.size());
    ones.labels.assign(kept.size(), "");
    for (auto [u, v] : inst.weight_one)
        if (local[u] >= 0 && local[v] >= 0) ones.edges.push_back({local[u], local[v], 1.0});
    double m1 = max_cardinality_matching(ones).cost;
    return static_cast<double>(kept.size()) - m1;
}

}  // namespace

MuOneTwo mu_12(const OneTwoInstance& inst) {
    if (inst.n < 2) throw std::invalid_argument("mu_12 requires n >= 2");
    MuOneTwo out;
    std::vector<int> all(inst.n);
    for (int i = 0; i < inst.n; ++i) all[i] = i;

    if (inst.n % 2 == 0) {
        out.value = even_case_value(inst, all);
        out.witness = all;
        return out;
    }

    int best_removed = 0;
    double best = -1.0;
    for (int skip = 0; skip < inst.n; ++skip) {
        std::vector<int> kept;
        kept.reserve(inst.n - 1);
        for (int v = 0; v < inst.n; ++v)
            if (v != skip) kept.push_back(v);
        double value = even_case_value(inst, kept);
        if (value > best) {  // strict: ties keep the smallest removed index
            best = value;
            best_removed = skip;
        }
    }
    out.value = best;
    for (int v = 0; v < inst.n; ++v)
        if (v != best_removed) out.witness.push_back(v);
    return out;
}

}  // namespace tjoin
