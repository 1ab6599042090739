#include "tjoin/greedy.hpp"

#include <limits>
#include <stdexcept>

#include "tjoin/matching.hpp"

namespace tjoin {

double harmonic(int m) {
    if (m < 0) throw std::invalid_argument("harmonic: negative argument");
    double h = 0.0;
    for (int i = 1; i <= m; ++i) h += 1.0 / i;
    return h;
}

GreedyOrdering greedy_ordering(const DistanceMatrix& d, int start) {
    const int n = d.n;
    if (n < 1) throw std::invalid_argument("greedy_ordering: empty metric");
    if (start < 0 || start >= n) throw std::invalid_argument("greedy_ordering: bad start vertex");

    GreedyOrdering out;
    out.order.reserve(n);
    out.step_distance.reserve(n);
    std::vector<char> chosen(n, 0);
    std::vector<double> dist_to_set(n, std::numeric_limits<double>::infinity());

    out.order.push_back(start);
    out.step_distance.push_back(std::numeric_limits<double>::infinity());
    chosen[start] = 1;
    for (int v = 0; v < n; ++v)
        if (!chosen[v]) dist_to_set[v] = d.at(v, start);

    for (int step = 1; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (chosen[v]) continue;
            if (pick < 0 || dist_to_set[v] > dist_to_set[pick]) pick = v;
        }
        out.order.push_back(pick);
        out.step_distance.push_back(dist_to_set[pick]);
        chosen[pick] = 1;
        for (int v = 0; v < n; ++v)
            if (!chosen[v]) dist_to_set[v] = std::min(dist_to_set[v], d.at(v, pick));
    }
    return out;
}

std::vector<PrefixBounds> prefix_matching_sequence(const DistanceMatrix& d,
                                                   const GreedyOrdering& ord) {
    const int n = d.n;
    if (n < 2) throw std::invalid_argument("prefix_matching_sequence requires n >= 2");

    std::vector<PrefixBounds> rows;
    double running_max = 0.0;
    for (int k = 1; 2 * k <= n; ++k) {
        std::vector<int> prefix(ord.order.begin(), ord.order.begin() + 2 * k);
        PrefixBounds row;
        row.k = k;
        // Only the cost feeds the rows, so skip the pair-list tie-breaking.
        row.mwm_prefix = detail::blossom_min_cost(d, prefix);
        running_max = std::max(running_max, row.mwm_prefix);
        row.opt_prefix = running_max;
        row.harmonic_ub = 2.0 * (1.0 + harmonic(k - 1)) * row.opt_prefix;
        rows.push_back(row);
    }
    return rows;
}

TJoinBounds tjoin_bounds(const DistanceMatrix& d, int start) {
    if (d.n < 2) throw std::invalid_argument("tjoin_bounds requires n >= 2");
    GreedyOrdering ord = greedy_ordering(d, start);
    std::vector<PrefixBounds> rows = prefix_matching_sequence(d, ord);

    int best_k = 1;
    double best = rows.front().mwm_prefix;
    for (const PrefixBounds& row : rows)
        if (row.mwm_prefix > best) {  // earliest prefix wins ties
            best = row.mwm_prefix;
            best_k = row.k;
        }

    TJoinBounds out;
    out.lower = best;
    out.upper = 2.0 * (1.0 + harmonic(d.n / 2 - 1)) * best;
    out.selected.assign(ord.order.begin(), ord.order.begin() + 2 * best_k);
    return out;
}

}  // namespace tjoin
