#include "tjoin/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tjoin {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool is_header(const std::vector<std::string>& fields) {
    auto lower = [](std::string s) {
        for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    };
    return fields.size() == 3 && lower(fields[0]) == "u" && lower(fields[1]) == "v" &&
           lower(fields[2]) == "w";
}

[[noreturn]] void line_error(int line_no, const std::string& msg) {
    throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

double parse_weight(const std::string& s, int line_no) {
    size_t idx = 0;
    double w = 0.0;
    try {
        w = std::stod(s, &idx);
    } catch (const std::exception&) {
        line_error(line_no, "cannot parse weight '" + s + "'");
    }
    if (idx != s.size() || !std::isfinite(w)) line_error(line_no, "cannot parse weight '" + s + "'");
    return w;
}

long long parse_count(const std::string& s, int line_no) {
    size_t idx = 0;
    long long c = 0;
    try {
        c = std::stoll(s, &idx);
    } catch (const std::exception&) {
        line_error(line_no, "cannot parse count '" + s + "'");
    }
    if (idx != s.size()) line_error(line_no, "cannot parse count '" + s + "'");
    return c;
}

struct Interner {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;

    int intern(const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(label);
        index.emplace(label, id);
        return id;
    }
};

// Shared record scanner for edge lists and similarity lists.
template <typename OnRecord>
void scan_records(const std::string& text, OnRecord&& on_record) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool seen_record = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields = split_fields(t);
        if (!seen_record && is_header(fields)) {
            seen_record = true;
            continue;
        }
        seen_record = true;
        if (fields.size() != 3) line_error(line_no, "expected `label,label,value`");
        if (fields[0].empty() || fields[1].empty()) line_error(line_no, "empty vertex label");
        on_record(fields, line_no);
    }
}

}  // namespace

std::optional<double> WeightedGraph::edge_weight(int u, int v) const {
    for (const Edge& e : edges)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.w;
    return std::nullopt;
}

bool WeightedGraph::is_complete() const {
    return static_cast<long long>(edges.size()) == static_cast<long long>(n) * (n - 1) / 2;
}

double WeightedGraph::total_weight() const {
    double s = 0.0;
    for (const Edge& e : edges) s += e.w;
    return s;
}

std::vector<std::vector<std::pair<int, double>>> WeightedGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

DistanceMatrix DistanceMatrix::zero(int n) {
    DistanceMatrix m;
    m.n = n;
    m.d.assign(static_cast<size_t>(n) * n, 0.0);
    return m;
}

std::string MetricViolation::describe() const {
    char buf[160];
    switch (kind) {
        case Kind::Diagonal:
            std::snprintf(buf, sizeof buf, "d(%d,%d) must be 0 on the diagonal", i, j);
            break;
        case Kind::Symmetry:
            std::snprintf(buf, sizeof buf, "d(%d,%d) != d(%d,%d) by %g", i, j, j, i, amount);
            break;
        case Kind::Positivity:
            std::snprintf(buf, sizeof buf, "d(%d,%d) must be positive", i, j);
            break;
        case Kind::Triangle:
            std::snprintf(buf, sizeof buf, "d(%d,%d) > d(%d,%d) + d(%d,%d) by %g", i, j, i, k, k,
                          j, amount);
            break;
    }
    return buf;
}

WeightedGraph load_edge_list(const std::string& text) {
    WeightedGraph g;
    Interner in;
    std::set<std::pair<int, int>> seen;
    scan_records(text, [&](const std::vector<std::string>& f, int line_no) {
        double w = parse_weight(f[2], line_no);
        if (w <= 0.0) line_error(line_no, "non-positive weight " + f[2]);
        if (f[0] == f[1]) line_error(line_no, "self-loop on '" + f[0] + "'");
        int u = in.intern(f[0]);
        int v = in.intern(f[1]);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            line_error(line_no, "duplicate undirected edge " + f[0] + "," + f[1]);
        g.edges.push_back({u, v, w});
    });
    g.labels = in.labels;
    g.n = static_cast<int>(in.labels.size());
    return g;
}

WeightedGraph load_similarity_list(const std::string& text) {
    std::vector<std::tuple<std::string, std::string, long long>> counts;
    scan_records(text, [&](const std::vector<std::string>& f, int line_no) {
        long long c = parse_count(f[2], line_no);
        if (c < 0) line_error(line_no, "negative similarity count " + f[2]);
        if (f[0] == f[1]) line_error(line_no, "self-loop on '" + f[0] + "'");
        counts.emplace_back(f[0], f[1], c);
    });
    return similarity_to_distance(counts);
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::string out = "u,v,w\n";
    char buf[64];
    for (const Edge& e : g.edges) {
        std::snprintf(buf, sizeof buf, "%.17g", e.w);
        out += g.labels[e.u];
        out += ',';
        out += g.labels[e.v];
        out += ',';
        out += buf;
        out += '\n';
    }
    return out;
}

WeightedGraph similarity_to_distance(
    const std::vector<std::tuple<std::string, std::string, long long>>& counts) {
    WeightedGraph g;
    Interner in;
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b, c] : counts) {
        if (c < 0) throw InputError("negative similarity count for " + a + "," + b);
        if (a == b) throw InputError("self-loop on '" + a + "'");
        int u = in.intern(a);
        int v = in.intern(b);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw InputError("duplicate pair " + a + "," + b);
        g.edges.push_back({u, v, 1.0 / (static_cast<double>(c) + 1.0)});
    }
    g.labels = in.labels;
    g.n = static_cast<int>(in.labels.size());
    return g;
}

bool is_connected(const WeightedGraph& g) {
    if (g.n <= 1) return true;
    auto adj = g.adjacency();
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, w] : adj[u]) {
            (void)w;
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == g.n;
}

DistanceMatrix metric_closure(const WeightedGraph& g) {
    const double inf = std::numeric_limits<double>::infinity();
    DistanceMatrix m;
    m.n = g.n;
    m.d.assign(static_cast<size_t>(g.n) * g.n, inf);
    for (int i = 0; i < g.n; ++i) m.at(i, i) = 0.0;
    for (const Edge& e : g.edges) {
        if (e.w < m.at(e.u, e.v)) {
            m.at(e.u, e.v) = e.w;
            m.at(e.v, e.u) = e.w;
        }
    }
    for (int k = 0; k < g.n; ++k)
        for (int i = 0; i < g.n; ++i) {
            double dik = m.at(i, k);
            if (dik == inf) continue;
            for (int j = 0; j < g.n; ++j) {
                double alt = dik + m.at(k, j);
                if (alt < m.at(i, j)) m.at(i, j) = alt;
            }
        }
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (m.at(i, j) == inf)
                throw InputError("graph is disconnected: no path between '" + g.labels[i] +
                                 "' and '" + g.labels[j] + "'");
    return m;
}

std::vector<MetricViolation> verify_metric(const DistanceMatrix& d) {
    std::vector<MetricViolation> out;
    const int n = d.n;
    for (int i = 0; i < n; ++i)
        if (std::abs(d.at(i, i)) > kTol)
            out.push_back({MetricViolation::Kind::Diagonal, i, i, 0, std::abs(d.at(i, i))});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double gap = std::abs(d.at(i, j) - d.at(j, i));
            if (gap > kTol) out.push_back({MetricViolation::Kind::Symmetry, i, j, 0, gap});
            if (d.at(i, j) <= 0.0)
                out.push_back({MetricViolation::Kind::Positivity, i, j, 0, -d.at(i, j)});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                double slack = d.at(i, j) - d.at(i, k) - d.at(k, j);
                if (slack > kTol)
                    out.push_back({MetricViolation::Kind::Triangle, i, j, k, slack});
            }
    return out;
}

namespace {

struct BridgeFinder {
    const std::vector<std::vector<std::pair<int, double>>>& adj;
    std::vector<int> tin, low;
    std::vector<char> visited;
    std::vector<std::pair<int, int>> bridges;  // (u,v) with u,v as visited
    int timer = 0;

    explicit BridgeFinder(const std::vector<std::vector<std::pair<int, double>>>& a)
        : adj(a), tin(a.size(), 0), low(a.size(), 0), visited(a.size(), 0) {}

    void dfs(int u, int parent) {
        visited[u] = 1;
        tin[u] = low[u] = ++timer;
        bool parent_skipped = false;  // one parallel edge to the parent is the tree edge
        for (auto [v, w] : adj[u]) {
            (void)w;
            if (v == parent && !parent_skipped) {
                parent_skipped = true;
                continue;
            }
            if (visited[v]) {
                low[u] = std::min(low[u], tin[v]);
            } else {
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > tin[u]) bridges.emplace_back(u, v);
            }
        }
    }
};

}  // namespace

std::vector<Edge> find_bridges(const WeightedGraph& g) {
    auto adj = g.adjacency();
    BridgeFinder bf(adj);
    for (int s = 0; s < g.n; ++s)
        if (!bf.visited[s]) bf.dfs(s, -1);
    std::set<std::pair<int, int>> bridge_keys;
    for (auto [u, v] : bf.bridges) bridge_keys.insert(std::minmax(u, v));
    std::vector<Edge> out;
    for (const Edge& e : g.edges)
        if (bridge_keys.count(std::minmax(e.u, e.v))) out.push_back(e);
    return out;
}

BridgeContraction contract_bridges(const WeightedGraph& g) {
    if (!is_connected(g)) throw InputError("contract_bridges requires a connected graph");
    std::vector<Edge> bridges = find_bridges(g);

    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& b : bridges) {
        int ru = find(b.u), rv = find(b.v);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }

    BridgeContraction out;
    out.bridges = bridges;
    for (const Edge& b : bridges) out.bridge_weight += b.w;
    out.vertex_map.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (out.vertex_map[r] < 0) {
            out.vertex_map[r] = out.contracted.n++;
            out.contracted.labels.push_back(g.labels[r]);
        }
        out.vertex_map[v] = out.vertex_map[r];
    }

    std::set<std::pair<int, int>> bridge_keys;
    for (const Edge& b : bridges) bridge_keys.insert(std::minmax(b.u, b.v));
    std::map<std::pair<int, int>, double> merged;  // parallel edges keep the minimum
    for (const Edge& e : g.edges) {
        if (bridge_keys.count(std::minmax(e.u, e.v))) continue;
        int cu = out.vertex_map[e.u], cv = out.vertex_map[e.v];
        if (cu == cv) continue;  // merged self-loops are dropped
        auto key = std::minmax(cu, cv);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, e.w);
        else
            it->second = std::min(it->second, e.w);
    }
    for (const auto& [key, w] : merged)
        out.contracted.edges.push_back({key.first, key.second, w});
    return out;
}

}  // namespace tjoin
