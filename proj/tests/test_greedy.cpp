#include <cmath>
#include <limits>

#include "doctest.h"
#include "tjoin/greedy.hpp"
#include "tjoin/instances.hpp"
#include "tjoin/matching.hpp"
#include "tjoin/oracle.hpp"

using namespace tjoin;

namespace {

DistanceMatrix line_metric(const std::vector<double>& pos) {
    DistanceMatrix d = DistanceMatrix::zero(static_cast<int>(pos.size()));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) d.at(i, j) = std::abs(pos[i] - pos[j]);
    return d;
}

}  // namespace

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(4) == doctest::Approx(25.0 / 12.0));
    CHECK_THROWS_AS(harmonic(-1), std::invalid_argument);
}

TEST_CASE("greedy ordering walks farthest-first with index tie-breaks") {
    DistanceMatrix d = line_metric({0, 1, 9, 10});
    GreedyOrdering ord = greedy_ordering(d, 0);
    CHECK(ord.order == std::vector<int>{0, 3, 1, 2});  // positions 0, 10, 1, 9
    CHECK(std::isinf(ord.step_distance[0]));
    CHECK(ord.step_distance[1] == doctest::Approx(10.0));
    CHECK(ord.step_distance[2] == doctest::Approx(1.0));
    CHECK(ord.step_distance[3] == doctest::Approx(1.0));
}

TEST_CASE("greedy ordering degenerate and property cases") {
    DistanceMatrix one = DistanceMatrix::zero(1);
    CHECK(greedy_ordering(one, 0).order == std::vector<int>{0});
    CHECK_THROWS_AS(greedy_ordering(one, 1), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        DistanceMatrix d = make_random_metric(9, 300 + seed);
        GreedyOrdering ord = greedy_ordering(d, static_cast<int>(seed % 9));
        std::vector<char> seen(d.n, 0);
        for (int v : ord.order) seen[v] = 1;
        for (char c : seen) CHECK(c == 1);
        for (size_t i = 2; i + 1 < ord.step_distance.size(); ++i)
            CHECK(ord.step_distance[i] + kTol >= ord.step_distance[i + 1]);
    }
}

TEST_CASE("prefix matching sequence on the line example") {
    DistanceMatrix d = line_metric({0, 1, 9, 10});
    auto rows = prefix_matching_sequence(d, greedy_ordering(d, 0));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].mwm_prefix == doctest::Approx(10.0));
    CHECK(rows[1].mwm_prefix == doctest::Approx(2.0));
    CHECK(rows[0].opt_prefix == doctest::Approx(10.0));
    CHECK(rows[1].opt_prefix == doctest::Approx(10.0));
    CHECK(rows[0].harmonic_ub == doctest::Approx(20.0));  // 2 (1 + H_0) * 10
    CHECK(rows[1].harmonic_ub == doctest::Approx(40.0));  // 2 (1 + H_1) * 10
}

TEST_CASE("unit complete metric has mwm_prefix(k) = k") {
    DistanceMatrix d = metric_closure(make_unit_complete(8));
    auto rows = prefix_matching_sequence(d, greedy_ordering(d, 0));
    for (const PrefixBounds& row : rows) CHECK(row.mwm_prefix == doctest::Approx(row.k));
}

TEST_CASE("opt_prefix is non-decreasing and k=1 bound is 2 opt_2") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        DistanceMatrix d = make_random_metric(10, 40 + seed);
        auto rows = prefix_matching_sequence(d, greedy_ordering(d, 0));
        for (size_t i = 0; i + 1 < rows.size(); ++i)
            CHECK(rows[i].opt_prefix <= rows[i + 1].opt_prefix + kTol);
        CHECK(rows[0].harmonic_ub == doctest::Approx(2.0 * rows[0].opt_prefix));
    }
}

TEST_CASE("tjoin_bounds on the line example") {
    DistanceMatrix d = line_metric({0, 1, 9, 10});
    TJoinBounds tb = tjoin_bounds(d, 0);
    CHECK(tb.lower == doctest::Approx(10.0));
    CHECK(tb.upper == doctest::Approx(40.0));
    CHECK(tb.selected == std::vector<int>{0, 3});  // the two extreme points

    MuResult mu = brute_force_mu(d);
    CHECK(mu.value == doctest::Approx(10.0));
    CHECK(tb.lower <= mu.value + kTol);
    CHECK(mu.value <= tb.upper + kTol);
}

TEST_CASE("tjoin_bounds with two points") {
    DistanceMatrix d = line_metric({0, 7});
    TJoinBounds tb = tjoin_bounds(d, 0);
    CHECK(tb.lower == doctest::Approx(7.0));
    CHECK(tb.upper == doctest::Approx(14.0));  // 2 (1 + H_0) * 7
    CHECK_THROWS_AS(tjoin_bounds(DistanceMatrix::zero(1), 0), std::invalid_argument);
}

TEST_CASE("opt_2k can exceed mu_2k: the epsilon-paired line") {
    WeightedGraph g = make_line_instance(4, 0.01);
    DistanceMatrix d = metric_closure(g);

    // mu over the full 8-point set is 4 eps; the greedy opt_2 is the diameter.
    MuResult full = brute_force_mu_2k(d, 4);
    CHECK(full.value == doctest::Approx(0.04));
    auto rows = prefix_matching_sequence(d, greedy_ordering(d, 0));
    CHECK(rows[0].opt_prefix == doctest::Approx(3.01));
    CHECK(rows[0].opt_prefix > full.value);  // opt_2k is NOT a lower bound for mu_2k

    TJoinBounds tb = tjoin_bounds(d, 0);
    MuResult mu = brute_force_mu(d);
    CHECK(mu.value == doctest::Approx(3.01));  // the diameter pair dominates
    CHECK(tb.lower <= mu.value + kTol);
}

TEST_CASE("sandwich holds from every start vertex") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        int n = 5 + static_cast<int>(seed);
        DistanceMatrix d = make_random_metric(n, 7000 + seed);
        MuResult mu = brute_force_mu(d);
        for (int start = 0; start < n; ++start) {
            TJoinBounds tb = tjoin_bounds(d, start);
            CHECK(tb.lower <= mu.value + kTol);
            CHECK(mu.value <= tb.upper + kTol);
        }
    }
}

TEST_CASE("per-k sandwich against the mu_2k oracle") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        int n = 6 + static_cast<int>(seed % 4);
        DistanceMatrix d = make_random_metric(n, 8100 + seed);
        auto rows = prefix_matching_sequence(d, greedy_ordering(d, 0));
        for (const PrefixBounds& row : rows) {
            if (row.k > 4) break;
            MuResult mu2k = brute_force_mu_2k(d, row.k);
            CHECK(row.mwm_prefix <= mu2k.value + kTol);
            CHECK(mu2k.value <= row.harmonic_ub + kTol);
        }
    }
}
