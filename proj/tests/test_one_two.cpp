#include <cmath>

#include "doctest.h"
#include "tjoin/instances.hpp"
#include "tjoin/matching.hpp"
#include "tjoin/one_two.hpp"
#include "tjoin/oracle.hpp"

using namespace tjoin;

namespace {

OneTwoInstance instance_from(int n, std::vector<std::pair<int, int>> ones) {
    OneTwoInstance inst;
    inst.n = n;
    inst.weight_one = std::move(ones);
    std::sort(inst.weight_one.begin(), inst.weight_one.end());
    return inst;
}

}  // namespace

TEST_CASE("even case: a weight-1 triangle among four vertices") {
    OneTwoInstance inst = instance_from(4, {{1, 2}, {1, 3}, {2, 3}});
    MuOneTwo r = mu_12(inst);
    CHECK(r.value == doctest::Approx(3.0));  // m1 = 1, so 4 - 1
    CHECK(r.witness == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("all weights 1 gives n/2") {
    OneTwoInstance inst = instance_from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(mu_12(inst).value == doctest::Approx(2.0));
}

TEST_CASE("odd case removes the cheapest vertex") {
    OneTwoInstance inst = instance_from(3, {{0, 1}});
    MuOneTwo r = mu_12(inst);
    CHECK(r.value == doctest::Approx(2.0));
    CHECK(r.witness == std::vector<int>{1, 2});  // vertex 0 removed (smallest tie)
    CHECK_THROWS_AS(mu_12(instance_from(1, {})), std::invalid_argument);
}

TEST_CASE("validate_one_two accepts exactly complete {1,2} graphs") {
    CHECK(validate_one_two(load_edge_list("a,b,1\nb,c,2\na,c,2")).weight_one.size() == 1);
    CHECK_THROWS_AS(validate_one_two(load_edge_list("a,b,1\nb,c,1.5\na,c,2")), InfeasibleError);
    CHECK_THROWS_AS(validate_one_two(load_edge_list("a,b,1\nb,c,2")), InfeasibleError);
}

TEST_CASE("exactness against the brute-force oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 4 + static_cast<int>(seed % 6);  // 4..9
        WeightedGraph g = make_one_two_graph(n, 0.15 * static_cast<double>(seed % 6), seed);
        OneTwoInstance inst = validate_one_two(g);
        MuOneTwo r = mu_12(inst);
        MuResult oracle = brute_force_mu(inst.to_distance_matrix());
        CHECK(r.value == doctest::Approx(oracle.value));

        if (n % 2 == 0) {
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            CHECK(r.value ==
                  doctest::Approx(min_weight_perfect_matching(inst.to_distance_matrix(), all).cost));
            CHECK(r.value >= n / 2.0 - kTol);
            CHECK(r.value <= n + kTol);
        }
    }
}

TEST_CASE("after the weight-1 matching every leftover pair has weight 2") {
    for (std::uint64_t seed = 100; seed < 115; ++seed) {
        int n = 4 + 2 * static_cast<int>(seed % 3);
        WeightedGraph g = make_one_two_graph(n, 0.4, seed);
        OneTwoInstance inst = validate_one_two(g);

        WeightedGraph ones;
        ones.n = inst.n;
        ones.labels.assign(inst.n, "");
        for (auto [u, v] : inst.weight_one) ones.edges.push_back({u, v, 1.0});
        Matching m1 = max_cardinality_matching(ones);

        std::vector<char> matched(inst.n, 0);
        for (auto [u, v] : m1.pairs) matched[u] = matched[v] = 1;
        for (int u = 0; u < inst.n; ++u)
            for (int v = u + 1; v < inst.n; ++v)
                if (!matched[u] && !matched[v]) CHECK(inst.weight(u, v) == 2.0);

        CHECK(mu_12(inst).value == doctest::Approx(inst.n - m1.cost));
    }
}
