#include "tjoin/matching.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace tjoin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// O(n^3) primal-dual blossom algorithm for maximum-weight perfect matching
// on a complete graph, dense-matrix formulation. Node ids are 1-based;
// ids in (n, 2n] are contracted blossoms. Duals are kept per original
// vertex plus one dual per active blossom; an edge (u,v) is tight when
// lab[u] + lab[v] - 2 w(u,v) vanishes. The perfect-matching variant lets
// vertex duals go negative, so there is no early "leave unmatched" exit.
class Blossom {
public:
    Blossom(const std::vector<double>& w, int n) : n_(n), size_(2 * n + 1) {
        arcs_.assign(static_cast<size_t>(size_) * size_, Arc{});
        double w_max = 0.0;
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                Arc& a = arc(u, v);
                a.u = u;
                a.v = v;
                a.w = (u == v) ? 0.0 : w[static_cast<size_t>(u - 1) * n_ + (v - 1)];
                w_max = std::max(w_max, a.w);
            }
        eps_ = 1e-11 * (1.0 + w_max);
        lab_.assign(size_, 0.0);
        match_.assign(size_, 0);
        slack_.assign(size_, 0);
        st_.assign(size_, 0);
        pa_.assign(size_, 0);
        state_.assign(size_, -1);
        vis_.assign(size_, 0);
        flower_.assign(size_, {});
        flower_from_.assign(size_, std::vector<int>(n_ + 1, 0));
        for (int u = 1; u <= n_; ++u) {
            st_[u] = u;
            lab_[u] = w_max;
            flower_from_[u][u] = u;
        }
        n_x_ = n_;
    }

    // mate[i] over 0-based indices, or throws if no perfect matching exists.
    std::vector<int> solve() {
        while (grow_phase()) {
        }
        std::vector<int> mate(n_);
        for (int u = 1; u <= n_; ++u) {
            if (!match_[u]) throw std::runtime_error("blossom matching: no perfect matching");
            mate[u - 1] = match_[u] - 1;
        }
        return mate;
    }

private:
    struct Arc {
        int u = 0, v = 0;
        double w = 0.0;
    };

    int n_, size_, n_x_ = 0, lca_stamp_ = 0;
    double eps_ = 0.0;
    std::vector<Arc> arcs_;
    std::vector<double> lab_;
    std::vector<int> match_, slack_, st_, pa_, state_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> queue_;

    Arc& arc(int a, int b) { return arcs_[static_cast<size_t>(a) * size_ + b]; }
    const Arc& arc(int a, int b) const { return arcs_[static_cast<size_t>(a) * size_ + b]; }

    double slack_of(const Arc& e) const { return lab_[e.u] + lab_[e.v] - 2.0 * e.w; }
    bool tight(const Arc& e) const { return slack_of(e) < eps_; }

    void update_slack(int u, int x) {
        if (!slack_[x] || slack_of(arc(u, x)) < slack_of(arc(slack_[x], x))) slack_[x] = u;
    }

    void recompute_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (arc(u, x).w > 0.0 && st_[u] != x && state_[st_[u]] == 0) update_slack(u, x);
    }

    void queue_push(int x) {
        if (x <= n_) {
            queue_.push_back(x);
        } else {
            for (int sub : flower_[x]) queue_push(sub);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int sub : flower_[x]) set_st(sub, b);
    }

    // Rotation offset of child xr inside blossom b, flipping the cycle if
    // needed so the offset is even (alternation starts with a matched edge).
    int get_pr(int b, int xr) {
        auto& f = flower_[b];
        int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
        if (pr % 2 == 1) {
            std::reverse(f.begin() + 1, f.end());
            return static_cast<int>(f.size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        Arc e = arc(u, v);
        match_[u] = e.v;
        if (u <= n_) return;
        int xr = flower_from_[u][e.u];
        int pr = get_pr(u, xr);
        auto& f = flower_[u];
        for (int i = 0; i < pr; ++i) set_match(f[i], f[i ^ 1]);
        set_match(xr, v);
        std::rotate(f.begin(), f.begin() + pr, f.end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++lca_stamp_; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == lca_stamp_) return u;
            vis_[u] = lca_stamp_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0.0;
        state_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            queue_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            queue_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) {
            arc(b, x).w = 0.0;
            arc(x, b).w = 0.0;
        }
        std::fill(flower_from_[b].begin(), flower_from_[b].end(), 0);
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (arc(b, x).w == 0.0 ||
                    slack_of(arc(xs, x)) < slack_of(arc(b, x))) {
                    arc(b, x) = arc(xs, x);
                    arc(x, b) = arc(x, xs);
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        recompute_slack(b);
    }

    void expand_blossom(int b) {  // state_[b] == 1 and dual exhausted
        for (int sub : flower_[b]) set_st(sub, sub);
        int xr = flower_from_[b][arc(b, pa_[b]).u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower_[b][i];
            int xns = flower_[b][i + 1];
            pa_[xs] = arc(xns, xs).u;
            state_[xs] = 1;
            state_[xns] = 0;
            slack_[xs] = 0;
            recompute_slack(xns);
            queue_push(xns);
        }
        state_[xr] = 1;
        pa_[xr] = pa_[b];
        for (size_t i = pr + 1; i < flower_[b].size(); ++i) {
            int xs = flower_[b][i];
            state_[xs] = -1;
            recompute_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const Arc& e) {
        int u = st_[e.u];
        int v = st_[e.v];
        if (state_[v] == -1) {
            pa_[v] = e.u;
            state_[v] = 1;
            int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            state_[nu] = 0;
            queue_push(nu);
        } else if (state_[v] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    // One alternating-tree phase; returns true after an augmentation,
    // false when every vertex is already matched.
    bool grow_phase() {
        std::fill(state_.begin() + 1, state_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        queue_.clear();
        bool any_root = false;
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                state_[x] = 0;
                queue_push(x);
                any_root = true;
            }
        if (!any_root) return false;

        long guard = 64L * n_ * n_ + 4096;
        for (;;) {
            while (!queue_.empty()) {
                int u = queue_.front();
                queue_.pop_front();
                if (state_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (arc(u, v).w > 0.0 && st_[u] != st_[v]) {
                        if (tight(arc(u, v))) {
                            if (on_found_edge(arc(u, v))) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }

            double delta = kInf;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && state_[b] == 1) delta = std::min(delta, lab_[b] / 2.0);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    double s = slack_of(arc(slack_[x], x));
                    if (state_[x] == -1)
                        delta = std::min(delta, s);
                    else if (state_[x] == 0)
                        delta = std::min(delta, s / 2.0);
                }
            if (delta == kInf)
                throw std::runtime_error("blossom matching: no perfect matching");
            delta = std::max(delta, 0.0);

            for (int u = 1; u <= n_; ++u) {
                if (state_[st_[u]] == 0)
                    lab_[u] -= delta;
                else if (state_[st_[u]] == 1)
                    lab_[u] += delta;
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (state_[b] == 0)
                        lab_[b] += 2.0 * delta;
                    else if (state_[b] == 1)
                        lab_[b] -= 2.0 * delta;
                }

            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    tight(arc(slack_[x], x))) {
                    if (on_found_edge(arc(slack_[x], x))) return true;
                }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && state_[b] == 1 && lab_[b] < eps_) expand_blossom(b);

            if (--guard < 0)
                throw std::runtime_error("blossom matching did not converge");
        }
    }
};

std::vector<double> subset_matrix(const DistanceMatrix& d, const std::vector<int>& verts) {
    const int m = static_cast<int>(verts.size());
    std::vector<double> w(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) w[static_cast<size_t>(i) * m + j] = d.at(verts[i], verts[j]);
    return w;
}

void check_subset(const DistanceMatrix& d, const std::vector<int>& subset) {
    if (subset.size() % 2 != 0)
        throw std::invalid_argument("perfect matching requires an even vertex subset");
    for (int v : subset)
        if (v < 0 || v >= d.n) throw std::invalid_argument("vertex index out of range");
}

}  // namespace

namespace detail {

std::vector<int> blossom_min_weight_perfect_matching(const std::vector<double>& w, int m) {
    if (m % 2 != 0) throw std::invalid_argument("blossom: odd number of vertices");
    if (m == 0) return {};
    if (m == 2) return {1, 0};
    // Minimize by maximizing the reflected weights (w_max - w) + 1 > 0;
    // the shift keeps every edge present and the optimum perfect.
    double w_max = 0.0;
    for (double x : w) w_max = std::max(w_max, x);
    std::vector<double> flipped(w.size(), 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j)
                flipped[static_cast<size_t>(i) * m + j] =
                    (w_max - w[static_cast<size_t>(i) * m + j]) + 1.0;
    Blossom solver(flipped, m);
    return solver.solve();
}

double blossom_min_cost(const DistanceMatrix& d, const std::vector<int>& verts) {
    const int m = static_cast<int>(verts.size());
    if (m == 0) return 0.0;
    std::vector<int> mate = blossom_min_weight_perfect_matching(subset_matrix(d, verts), m);
    double cost = 0.0;
    for (int i = 0; i < m; ++i)
        if (mate[i] > i) cost += d.at(verts[i], verts[mate[i]]);
    return cost;
}

}  // namespace detail

Matching min_weight_perfect_matching(const DistanceMatrix& d, const std::vector<int>& subset) {
    check_subset(d, subset);
    Matching result;
    if (subset.empty()) return result;

    std::vector<int> remaining(subset);
    std::sort(remaining.begin(), remaining.end());

    const double total = detail::blossom_min_cost(d, remaining);
    const double tol = 1e-12 * std::max(1.0, std::abs(total));

    // Lexicographic tie-break: repeatedly bind the smallest unmatched vertex
    // to the smallest partner that preserves optimality of the remainder.
    double fixed = 0.0;
    while (!remaining.empty()) {
        int u = remaining.front();
        bool bound = false;
        for (size_t j = 1; j < remaining.size() && !bound; ++j) {
            int v = remaining[j];
            std::vector<int> rest;
            rest.reserve(remaining.size() - 2);
            for (size_t t = 1; t < remaining.size(); ++t)
                if (t != j) rest.push_back(remaining[t]);
            double candidate = fixed + d.at(u, v) + detail::blossom_min_cost(d, rest);
            if (candidate <= total + tol) {
                result.pairs.emplace_back(u, v);
                fixed += d.at(u, v);
                remaining = std::move(rest);
                bound = true;
            }
        }
        if (!bound) throw std::runtime_error("matching refinement failed to bind a pair");
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    result.cost = 0.0;
    for (auto [u, v] : result.pairs) result.cost += d.at(u, v);
    return result;
}

Matching brute_force_matching(const DistanceMatrix& d, const std::vector<int>& subset) {
    check_subset(d, subset);
    const int m = static_cast<int>(subset.size());
    if (m > 14) throw std::invalid_argument("brute_force_matching supports at most 14 vertices");
    Matching result;
    if (m == 0) return result;

    std::vector<int> verts(subset);
    std::sort(verts.begin(), verts.end());
    const int full = (1 << m) - 1;
    std::vector<double> dp(full + 1, kInf);
    std::vector<int> choice(full + 1, -1);
    dp[0] = 0.0;
    for (int mask = 1; mask <= full; ++mask) {
        int i = std::countr_zero(static_cast<unsigned>(mask));
        if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        for (int j = i + 1; j < m; ++j) {
            if (!(mask >> j & 1)) continue;
            double c = d.at(verts[i], verts[j]) + dp[mask ^ (1 << i) ^ (1 << j)];
            if (c < dp[mask]) {
                dp[mask] = c;
                choice[mask] = j;
            }
        }
    }
    int mask = full;
    while (mask) {
        int i = std::countr_zero(static_cast<unsigned>(mask));
        int j = choice[mask];
        result.pairs.emplace_back(verts[i], verts[j]);
        mask ^= (1 << i) | (1 << j);
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    result.cost = dp[full];
    return result;
}

namespace {

// Unweighted Edmonds blossom via base relabeling; O(V^3).
class CardinalityMatcher {
public:
    explicit CardinalityMatcher(const WeightedGraph& g) : n_(g.n), adj_(g.n) {
        for (const Edge& e : g.edges) {
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
        match_.assign(n_, -1);
    }

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) {
                int u = find_augmenting_path(v);
                while (u >= 0) {
                    int pv = parent_[u], ppv = match_[pv];
                    match_[u] = pv;
                    match_[pv] = u;
                    u = ppv;
                }
            }
        return match_;
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        used_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        std::queue<int> q;
        used_[root] = 1;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int cur_base = lowest_common_base(v, to);
                    in_blossom_.assign(n_, 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }
};

}  // namespace

Matching max_cardinality_matching(const WeightedGraph& g) {
    CardinalityMatcher matcher(g);
    std::vector<int> mate = matcher.solve();
    Matching result;
    for (int v = 0; v < g.n; ++v)
        if (mate[v] > v) result.pairs.emplace_back(v, mate[v]);
    std::sort(result.pairs.begin(), result.pairs.end());
    result.cost = static_cast<double>(result.pairs.size());
    return result;
}

}  // namespace tjoin
