#include <string>

#include "doctest.h"
#include "support.hpp"

namespace {

const std::string kCli = TJOIN_CLI_PATH;
const std::string kGolden = TJOIN_GOLDEN_DIR;

const char* kLine4 =
    "p0,p1,1\np0,p9,9\np0,p10,10\np1,p9,8\np1,p10,9\np9,p10,1\n";

}  // namespace

using testsupport::read_file;
using testsupport::run_command;
using testsupport::write_temp_file;

TEST_CASE("bounds table matches the golden files") {
    std::string file = write_temp_file(kLine4, "line4");
    auto csv = run_command(kCli + " bounds " + file);
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output == read_file(kGolden + "/bounds_line4.csv"));

    auto md = run_command(kCli + " bounds " + file + " --format md");
    REQUIRE(md.exit_code == 0);
    CHECK(md.output == read_file(kGolden + "/bounds_line4.md"));
}

TEST_CASE("mu2k table matches the golden file") {
    auto gen = run_command(kCli + " gen unit-complete --n 6 --out /tmp/tjoin_unit6.csv");
    REQUIRE(gen.exit_code == 0);
    auto csv = run_command(kCli + " mu2k /tmp/tjoin_unit6.csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output == read_file(kGolden + "/mu2k_unit6.csv"));
    auto md = run_command(kCli + " mu2k /tmp/tjoin_unit6.csv --format md");
    REQUIRE(md.exit_code == 0);
    CHECK(md.output == read_file(kGolden + "/mu2k_unit6.md"));
}

TEST_CASE("output is byte-identical across runs") {
    std::string file = write_temp_file(kLine4, "determinism");
    auto first = run_command(kCli + " bounds " + file);
    auto second = run_command(kCli + " bounds " + file);
    CHECK(first.output == second.output);
    auto e1 = run_command(kCli + " ear " + file);
    auto e2 = run_command(kCli + " ear " + file);
    CHECK(e1.output == e2.output);
}

TEST_CASE("generators feed the oracle") {
    auto gen = run_command(kCli + " gen figure1 --epsilon 0.0625 --out /tmp/tjoin_fig1.csv");
    REQUIRE(gen.exit_code == 0);
    auto mu = run_command(kCli + " oracle mu /tmp/tjoin_fig1.csv");
    REQUIRE(mu.exit_code == 0);
    CHECK(mu.output.find("mu,9.0625\n") == 0);

    auto equiv = run_command(kCli + " oracle equivalence /tmp/tjoin_fig1.csv");
    REQUIRE(equiv.exit_code == 0);
    CHECK(equiv.output.find("result,PASS") != std::string::npos);

    auto line = run_command(kCli + " gen line --pairs 4 --epsilon 0.01 --out /tmp/tjoin_line8.csv");
    REQUIRE(line.exit_code == 0);
    auto mu2k = run_command(kCli + " oracle mu2k /tmp/tjoin_line8.csv --k 4");
    REQUIRE(mu2k.exit_code == 0);
    CHECK(mu2k.output.find("mu2k,0.04\n") == 0);

    auto onetwo = run_command(kCli + " gen one-two --n 6 --p1 0.5 --seed 7");
    REQUIRE(onetwo.exit_code == 0);
    auto again = run_command(kCli + " gen one-two --n 6 --p1 0.5 --seed 7");
    CHECK(onetwo.output == again.output);  // seeded generators are reproducible
}

TEST_CASE("ear subcommand reports the dfs bound") {
    run_command(kCli + " gen figure1 --epsilon 0.0625 --out /tmp/tjoin_fig1b.csv");
    auto ear = run_command(kCli + " ear /tmp/tjoin_fig1b.csv --strategy dfs --root 0");
    REQUIRE(ear.exit_code == 0);
    CHECK(ear.output.find("bound,10.0625\n") != std::string::npos);
    CHECK(ear.output.find("cycle:") != std::string::npos);
}

TEST_CASE("ear auto-switches to the FPTAS beyond the exact knapsack cap") {
    run_command(kCli + " gen unit-complete --n 50 --out /tmp/tjoin_unit50.csv");
    auto ear = run_command(kCli + " ear /tmp/tjoin_unit50.csv");
    REQUIRE(ear.exit_code == 0);
    size_t at = ear.output.find("bound,");
    REQUIRE(at != std::string::npos);
    double bound = std::stod(ear.output.substr(at + 6));
    CHECK(bound >= 25.0 - 1e-9);   // mu(unit K50) = 25
    CHECK(bound <= 25.0 / 0.99 + 1e-9);  // epsilon inflation stays modest
}

TEST_CASE("tsp subcommand on the unit complete graph") {
    run_command(kCli + " gen unit-complete --n 6 --out /tmp/tjoin_unit6b.csv");
    auto tsp = run_command(kCli + " tsp /tmp/tjoin_unit6b.csv");
    REQUIRE(tsp.exit_code == 0);
    CHECK(tsp.output.find("cost,6\n") != std::string::npos);
    CHECK(tsp.output.find("tsp_half,3\n") != std::string::npos);
}

TEST_CASE("exact12 solves and rejects appropriately") {
    std::string good = write_temp_file("a,b,1\nb,c,2\na,c,2\n", "onetwo_good");
    auto ok = run_command(kCli + " exact12 " + good);
    REQUIRE(ok.exit_code == 0);
    CHECK(ok.output == "mu12,2\nwitness,b c\n");

    std::string bad = write_temp_file("a,b,1\nb,c,1.5\na,c,2\n", "onetwo_bad");
    CHECK(run_command(kCli + " exact12 " + bad).exit_code == 3);
}

TEST_CASE("input errors exit with code 2") {
    std::string malformed = write_temp_file("a,b,0\n", "malformed");
    CHECK(run_command(kCli + " bounds " + malformed).exit_code == 2);
    CHECK(run_command(kCli + " bounds /tmp/tjoin_does_not_exist.csv").exit_code == 2);

    run_command(kCli + " gen unit-complete --n 6 --out /tmp/tjoin_unit6c.csv");
    CHECK(run_command(kCli + " mu2k /tmp/tjoin_unit6c.csv --k-range 1:9").exit_code == 2);
}

TEST_CASE("two-vertex bounds row omits the tsp column") {
    std::string file = write_temp_file("a,b,7\n", "pairfile");
    auto res = run_command(kCli + " bounds " + file);
    REQUIRE(res.exit_code == 0);
    CHECK(res.output == "n,LB,UB,ratio\n2,7,7,1\n");
}

TEST_CASE("similarity inputs go through the 1/(c+1) weighting") {
    std::string file = write_temp_file("a,b,1\nb,c,0\na,c,3\n", "simfile");
    auto res = run_command(kCli + " oracle mu " + file + " --similarity");
    REQUIRE(res.exit_code == 0);
    // closure of weights 0.5, 1, 0.25: max pairwise distance is d(a,b) = 0.5
    CHECK(res.output.find("mu,0.75\n") == 0);
}
