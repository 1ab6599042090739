#include <cmath>

#include "doctest.h"
#include "tjoin/ears.hpp"
#include "tjoin/instances.hpp"
#include "tjoin/oracle.hpp"
#include "tjoin/tsp.hpp"

using namespace tjoin;

TEST_CASE("a single cycle is one ear") {
    WeightedGraph cyc = load_edge_list("a,b,1\nb,c,2\nc,d,3\nd,a,4");
    EarDecomposition dec = dfs_ear_decomposition(cyc);
    REQUIRE(dec.ears.size() == 1);
    CHECK(dec.ears[0].is_cycle());
    CHECK(dec.ears[0].total_weight() == doctest::Approx(10.0));
}

TEST_CASE("the gap gadget splits into the 7-cycle and the chord path") {
    WeightedGraph g = make_figure1(0.0625);
    EarDecomposition dec = dfs_ear_decomposition(g, 0);
    REQUIRE(dec.ears.size() == 2);
    CHECK(dec.ears[0].is_cycle());
    CHECK(dec.ears[0].vertices.size() == 7);
    CHECK(dec.ears[0].total_weight() == doctest::Approx(16.0));
    CHECK_FALSE(dec.ears[1].is_cycle());
    CHECK(dec.ears[1].vertices == std::vector<int>{0, 7, 3});  // v1 - v8 - v4
    CHECK(dec.ears[1].total_weight() == doctest::Approx(5.125));
}

TEST_CASE("K4 decomposes into an edge-disjoint cover") {
    WeightedGraph k4 = make_unit_complete(4);
    EarDecomposition dec = dfs_ear_decomposition(k4);
    check_ear_decomposition(dec, k4);  // throws on violation
    size_t covered = 0;
    for (const Ear& e : dec.ears) covered += e.edge_weights.size();
    CHECK(covered == 6);
    CHECK(dec.ears[0].is_cycle());
}

TEST_CASE("bridges are rejected with a pointer to contraction") {
    WeightedGraph g = load_edge_list("a,b,1\nb,c,1\nc,a,1\nc,d,2");
    CHECK_THROWS_WITH_AS(dfs_ear_decomposition(g), doctest::Contains("contract"),
                         std::invalid_argument);
}

TEST_CASE("hamiltonian-first decomposition shapes") {
    DistanceMatrix d4 = metric_closure(make_unit_complete(4));
    Tour tour{{0, 1, 2, 3}, 4.0};
    EarDecomposition dec = hamiltonian_first_decomposition(d4, tour);
    REQUIRE(dec.ears.size() == 3);  // the tour cycle plus both diagonals
    CHECK(dec.ears[0].is_cycle());
    CHECK(dec.ears[1].is_trivial);
    CHECK(dec.ears[2].is_trivial);
    CHECK(ear_max(dec.ears[1].edge_weights) == 0.0);  // trivial ears contribute nothing

    WeightedGraph k4 = make_unit_complete(4);
    check_ear_decomposition(dec, k4);  // covers the complete edge set

    DistanceMatrix d3 = metric_closure(make_unit_complete(3));
    EarDecomposition dec3 = hamiltonian_first_decomposition(d3, Tour{{0, 1, 2}, 3.0});
    CHECK(dec3.ears.size() == 1);

    CHECK_THROWS_AS(hamiltonian_first_decomposition(d4, Tour{{0, 1, 2}, 3.0}),
                    std::invalid_argument);
}

TEST_CASE("ear_max exact values") {
    CHECK(ear_max({3, 2, 2}) == doctest::Approx(3.0));  // best subset sum <= 3.5
    CHECK(ear_max({7.0}) == 0.0);
    for (int m : {2, 3, 5, 8}) {
        std::vector<double> unit(m, 1.0);
        CHECK(ear_max(unit) == doctest::Approx(m / 2));
    }
    CHECK_THROWS_AS(ear_max({}), std::invalid_argument);
    CHECK_THROWS_AS(ear_max(std::vector<double>(41, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(ear_max({1.0, 2.0}, 1.5), std::invalid_argument);
}

TEST_CASE("meet-in-the-middle agrees with full enumeration") {
    Rng rng(91);
    for (int trial = 0; trial < 25; ++trial) {
        int m = 2 + static_cast<int>(rng.next() % 11);  // 2..12
        std::vector<double> weights;
        double total = 0.0;
        for (int i = 0; i < m; ++i) {
            weights.push_back(rng.uniform(0.05, 3.0));
            total += weights.back();
        }
        double naive = 0.0;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            double s = 0.0;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) s += weights[i];
            if (s <= total / 2.0 + 1e-12 && s > naive) naive = s;
        }
        CHECK(ear_max(weights) == doctest::Approx(naive));
    }
}

TEST_CASE("ear_max FPTAS brackets the exact optimum") {
    Rng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 3 + static_cast<int>(rng.next() % 10);
        std::vector<double> weights;
        for (int i = 0; i < m; ++i) weights.push_back(rng.uniform(0.05, 2.0));
        double exact = ear_max(weights);
        for (double eps : {0.5, 0.1, 0.01}) {
            double approx = ear_max(weights, eps);
            CHECK(approx <= exact + kTol);
            CHECK(approx >= (1.0 - eps) * exact - kTol);
        }
    }
}

TEST_CASE("gap gadget bound: dfs from v1 gives 10 + eps/..") {
    WeightedGraph g = make_figure1(0.0625);
    EarBound bound = ear_upper_bound(g, EarStrategy::Dfs, {}, 0);
    // 7-cycle: best subset of {5,2,1,2,3,1,2} at most 8 is exactly 8;
    // chord path: best subset of {3.0625, 2.0625} at most 2.5625 is 2.0625.
    CHECK(bound.bound == doctest::Approx(10.0625));
    CHECK(bound.bridge_weight == 0.0);

    double mu = brute_force_mu(metric_closure(g)).value;
    EarBound best = best_ear_upper_bound(g);
    CHECK(best.bound >= mu - kTol);
    CHECK(best.bound <= bound.bound + kTol);
}

TEST_CASE("trees contract away entirely") {
    WeightedGraph tree = load_edge_list("a,b,1\nb,c,2\nc,d,3");
    EarBound bound = ear_upper_bound(tree, EarStrategy::Dfs);
    CHECK(bound.bound == doctest::Approx(6.0));
    CHECK(bound.decomposition.ears.empty());
    CHECK(bound.bridge_weight == doctest::Approx(6.0));
}

TEST_CASE("unit complete graphs bound to n/2 via the tour ear") {
    for (int n : {4, 6, 9}) {
        WeightedGraph g = make_unit_complete(n);
        EarBound bound = ear_upper_bound(g, EarStrategy::HamiltonianFirst);
        CHECK(bound.bound == doctest::Approx(n / 2));
    }
    CHECK_THROWS_AS(
        ear_upper_bound(load_edge_list("a,b,1\nb,c,1\nc,a,1\nc,d,1\nd,a,1"),
                        EarStrategy::HamiltonianFirst),
        std::invalid_argument);
}

TEST_CASE("bounds stay above the oracle for every strategy and root") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        WeightedGraph g = make_random_two_edge_connected(n, 12, 3300 + seed);
        double mu = brute_force_mu(metric_closure(g)).value;
        for (int root = 0; root < g.n; ++root) {
            EarBound bound = ear_upper_bound(g, EarStrategy::Dfs, {}, root);
            check_ear_decomposition(bound.decomposition, g);
            CHECK(bound.bound >= mu - kTol);
        }
        EarBound eps_bound = ear_upper_bound(g, EarStrategy::Dfs, 0.05, 0);
        CHECK(eps_bound.bound >= mu - kTol);  // inflation keeps it certified
        CHECK(best_ear_upper_bound(g).bound >= mu - kTol);
    }
}

TEST_CASE("unit-weight ears contribute floor(length/2)") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        WeightedGraph g =
            with_unit_weights(make_random_two_edge_connected(6, 12, 9100 + seed));
        EarDecomposition dec = dfs_ear_decomposition(g);
        double total = 0.0;
        for (const Ear& ear : dec.ears) {
            double value = ear_max(ear.edge_weights);
            CHECK(value == doctest::Approx(ear.edge_weights.size() / 2));
            total += value;
        }
        CHECK(ear_upper_bound(g, EarStrategy::Dfs).bound == doctest::Approx(total));
    }
}

TEST_CASE("decomposition serialization lists one ear per line") {
    WeightedGraph g = make_figure1(0.0625);
    EarDecomposition dec = dfs_ear_decomposition(g, 0);
    std::string text = serialize_ears(dec, g.labels);
    CHECK(text.find("cycle:") == 0);
    CHECK(text.find("path: v1 v8 v4 |") != std::string::npos);
}
