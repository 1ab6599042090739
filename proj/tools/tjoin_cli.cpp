// Command-line front end: bounds reports, exact algorithms, brute-force
// oracles, and synthetic instance generators for max-min T-join problems.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tjoin/ears.hpp"
#include "tjoin/greedy.hpp"
#include "tjoin/instances.hpp"
#include "tjoin/matching.hpp"
#include "tjoin/one_two.hpp"
#include "tjoin/oracle.hpp"
#include "tjoin/report.hpp"
#include "tjoin/tsp.hpp"

namespace {

using namespace tjoin;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

WeightedGraph load_graph(const std::string& path, bool similarity) {
    std::string text = read_file(path);
    return similarity ? load_similarity_list(text) : load_edge_list(text);
}

WeightedGraph complete_graph_of(const DistanceMatrix& d,
                                const std::vector<std::string>& labels) {
    WeightedGraph g;
    g.n = d.n;
    g.labels = labels;
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j) g.edges.push_back({i, j, d.at(i, j)});
    return g;
}

std::optional<double> auto_epsilon(int longest_ear) {
    if (longest_ear > 40) return 0.01;  // exact knapsack is capped at 40 edges
    return std::nullopt;
}

std::string join_labels(const std::vector<int>& verts, const std::vector<std::string>& labels) {
    std::string out;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) out += ' ';
        out += labels[verts[i]];
    }
    return out;
}

TableFormat parse_format(const std::string& fmt) {
    if (fmt == "csv") return TableFormat::Csv;
    if (fmt == "md") return TableFormat::Markdown;
    throw InputError("unknown format '" + fmt + "' (expected csv or md)");
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write file '" + out_path + "'");
    out << text;
}

// ---- subcommand bodies ----

int cmd_bounds(const std::string& file, bool similarity, int start, const std::string& fmt) {
    WeightedGraph g = load_graph(file, similarity);
    DistanceMatrix d = metric_closure(g);
    TJoinBounds tb = tjoin_bounds(d, start);

    BoundReportRow row;
    row.size = d.n;
    row.lower = tb.lower;
    row.harmonic_ub = tb.upper;
    WeightedGraph complete = complete_graph_of(d, g.labels);
    if (d.n >= 3) {
        Tour tour = christofides(d);
        row.tsp_ub = tour.cost / 2.0;
        row.ear_ub =
            ear_upper_bound(complete, EarStrategy::HamiltonianFirst, auto_epsilon(d.n)).bound;
    } else {
        row.ear_ub = ear_upper_bound(complete, EarStrategy::Dfs).bound;
    }
    std::cout << render_bounds_table({row}, parse_format(fmt));
    return 0;
}

int cmd_mu2k(const std::string& file, bool similarity, int start, const std::string& fmt,
             const std::string& k_range) {
    WeightedGraph g = load_graph(file, similarity);
    DistanceMatrix d = metric_closure(g);
    if (d.n < 2) throw InputError("mu2k requires at least two vertices");

    int k_lo = 1, k_hi = d.n / 2;
    if (!k_range.empty()) {
        size_t colon = k_range.find(':');
        try {
            if (colon == std::string::npos) {
                k_lo = k_hi = std::stoi(k_range);
            } else {
                k_lo = std::stoi(k_range.substr(0, colon));
                k_hi = std::stoi(k_range.substr(colon + 1));
            }
        } catch (const std::exception&) {
            throw InputError("cannot parse --k-range '" + k_range + "' (expected A:B)");
        }
    }
    if (k_lo < 1 || k_hi < k_lo || 2 * k_hi > d.n)
        throw InputError("k range " + std::to_string(k_lo) + ":" + std::to_string(k_hi) +
                         " outside 1:" + std::to_string(d.n / 2));

    GreedyOrdering ord = greedy_ordering(d, start);
    std::vector<PrefixBounds> seq = prefix_matching_sequence(d, ord);
    std::optional<double> tsp_ub;
    if (d.n >= 3) tsp_ub = tsp_half_upper_bound(d);

    std::vector<BoundReportRow> rows;
    for (const PrefixBounds& pb : seq) {
        if (pb.k < k_lo || pb.k > k_hi) continue;
        BoundReportRow row;
        row.size = 2 * pb.k;
        row.lower = pb.mwm_prefix;
        row.opt_prefix = pb.opt_prefix;
        row.harmonic_ub = pb.harmonic_ub;
        row.tsp_ub = tsp_ub;
        rows.push_back(row);
    }
    std::cout << render_mu2k_table(rows, parse_format(fmt));
    return 0;
}

int cmd_ear(const std::string& file, bool similarity, const std::string& strategy, int root,
            std::optional<double> epsilon) {
    WeightedGraph g = load_graph(file, similarity);
    if (!epsilon) epsilon = auto_epsilon(g.n);  // an ear has at most n edges
    EarBound result;
    if (strategy == "best") {
        result = best_ear_upper_bound(g, epsilon);
    } else if (strategy == "dfs") {
        result = ear_upper_bound(g, EarStrategy::Dfs, epsilon, root);
    } else if (strategy == "hamiltonian-first") {
        result = ear_upper_bound(g, EarStrategy::HamiltonianFirst, epsilon);
    } else {
        throw InputError("unknown strategy '" + strategy + "'");
    }
    std::cout << "strategy," << result.strategy << '\n';
    std::cout << "bridge_weight," << format_number(result.bridge_weight) << '\n';
    std::cout << "bound," << format_number(result.bound) << '\n';
    // Ears are reported on the bridge-contracted graph.
    std::cout << serialize_ears(result.decomposition, contract_bridges(g).contracted.labels);
    return 0;
}

int cmd_tsp(const std::string& file, bool similarity) {
    WeightedGraph g = load_graph(file, similarity);
    DistanceMatrix d = metric_closure(g);
    Tour tour = christofides(d);
    std::cout << "tour," << join_labels(tour.order, g.labels) << '\n';
    std::cout << "cost," << format_number(tour.cost) << '\n';
    std::cout << "tsp_half," << format_number(tour.cost / 2.0) << '\n';
    return 0;
}

int cmd_exact12(const std::string& file) {
    WeightedGraph g = load_graph(file, false);
    OneTwoInstance inst = validate_one_two(g);
    MuOneTwo result = mu_12(inst);
    std::cout << "mu12," << format_number(result.value) << '\n';
    std::cout << "witness," << join_labels(result.witness, g.labels) << '\n';
    return 0;
}

int cmd_oracle_mu(const std::string& file, bool similarity) {
    WeightedGraph g = load_graph(file, similarity);
    MuResult r = brute_force_mu(metric_closure(g));
    std::cout << "mu," << format_number(r.value) << '\n';
    std::cout << "subset," << join_labels(r.subset, g.labels) << '\n';
    return 0;
}

int cmd_oracle_mu2k(const std::string& file, bool similarity, int k) {
    WeightedGraph g = load_graph(file, similarity);
    MuResult r = brute_force_mu_2k(metric_closure(g), k);
    std::cout << "mu2k," << format_number(r.value) << '\n';
    std::cout << "subset," << join_labels(r.subset, g.labels) << '\n';
    return 0;
}

int cmd_oracle_maxvalid(const std::string& file, bool similarity) {
    WeightedGraph g = load_graph(file, similarity);
    ValidEdgeSet best = brute_force_max_valid_set(g);
    std::cout << "weight," << format_number(best.weight) << '\n';
    std::string edges;
    for (size_t i = 0; i < best.edge_indices.size(); ++i) {
        const Edge& e = g.edges[best.edge_indices[i]];
        if (i) edges += ';';
        edges += g.labels[e.u] + "-" + g.labels[e.v];
    }
    std::cout << "edges," << edges << '\n';
    std::cout << "odd_vertices," << join_labels(best.odd_vertices, g.labels) << '\n';
    return 0;
}

int cmd_oracle_equivalence(const std::string& file, bool similarity) {
    WeightedGraph g = load_graph(file, similarity);
    EquivalenceReport report = check_formulation_equivalence(g);
    std::cout << "max_valid_weight," << format_number(report.max_valid_weight) << '\n';
    std::cout << "mu," << format_number(report.mu_value) << '\n';
    std::cout << "odd_matching_cost," << format_number(report.odd_matching_cost) << '\n';
    std::cout << "result," << (report.consistent ? "PASS" : "FAIL") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds and exact algorithms for weighted max-min T-join problems"};
    app.require_subcommand(1);

    std::string file, fmt = "csv", k_range, strategy = "best", out_path;
    bool similarity = false;
    int start = 0, root = 0, k = 1;
    double epsilon_flag = -1.0;

    auto add_input = [&](CLI::App* cmd, bool with_start) {
        cmd->add_option("file", file, "edge-list input file")->required();
        cmd->add_flag("--similarity", similarity,
                      "interpret the third column as similarity counts");
        if (with_start) cmd->add_option("--start", start, "greedy start vertex index");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "lower/upper bounds for mu(G)");
    add_input(bounds, true);
    bounds->add_option("--format", fmt, "csv or md");

    CLI::App* mu2k = app.add_subcommand("mu2k", "per-2k bound table");
    add_input(mu2k, true);
    mu2k->add_option("--format", fmt, "csv or md");
    mu2k->add_option("--k-range", k_range, "k range A:B (default 1:floor(n/2))");

    CLI::App* ear = app.add_subcommand("ear", "ear-decomposition upper bound");
    add_input(ear, false);
    ear->add_option("--strategy", strategy, "dfs, hamiltonian-first, or best");
    ear->add_option("--root", root, "dfs root vertex");
    ear->add_option("--epsilon", epsilon_flag, "knapsack FPTAS accuracy in (0,1)");

    CLI::App* tsp = app.add_subcommand("tsp", "Christofides tour and TSP/2 bound");
    add_input(tsp, false);

    CLI::App* exact12 = app.add_subcommand("exact12", "exact mu for (1,2)-graphs");
    exact12->add_option("file", file, "edge-list input file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth (small inputs)");
    oracle->require_subcommand(1);
    CLI::App* omu = oracle->add_subcommand("mu", "exact mu by enumeration");
    add_input(omu, false);
    CLI::App* omu2k = oracle->add_subcommand("mu2k", "exact mu_2k by enumeration");
    add_input(omu2k, false);
    omu2k->add_option("--k", k, "pair count")->required();
    CLI::App* omaxvalid = oracle->add_subcommand("maxvalid", "maximum-weight valid edge set");
    add_input(omaxvalid, false);
    CLI::App* oequiv =
        oracle->add_subcommand("equivalence", "cross-check both problem formulations");
    add_input(oequiv, false);

    CLI::App* gen = app.add_subcommand("gen", "synthetic instance generators");
    gen->require_subcommand(1);
    int pairs = 4, n = 6;
    double epsilon = 0.01, p1 = 0.5;
    std::uint64_t seed = 0;
    CLI::App* gline = gen->add_subcommand("line", "epsilon-paired points on a line");
    gline->add_option("--pairs", pairs, "number of point pairs")->required();
    gline->add_option("--epsilon", epsilon, "pair offset")->required();
    gline->add_option("--out", out_path, "output file (default stdout)");
    CLI::App* gunit = gen->add_subcommand("unit-complete", "complete graph, unit weights");
    gunit->add_option("--n", n, "vertex count")->required();
    gunit->add_option("--out", out_path, "output file (default stdout)");
    CLI::App* gonetwo = gen->add_subcommand("one-two", "random complete {1,2}-weighted graph");
    gonetwo->add_option("--n", n, "vertex count")->required();
    gonetwo->add_option("--p1", p1, "probability of weight 1")->required();
    gonetwo->add_option("--seed", seed, "generator seed")->required();
    gonetwo->add_option("--out", out_path, "output file (default stdout)");
    CLI::App* gfig = gen->add_subcommand("figure1", "7-cycle gap gadget with chord path");
    gfig->add_option("--epsilon", epsilon, "chord weight offset")->required();
    gfig->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::optional<double> epsilon_opt;
        if (epsilon_flag >= 0.0) epsilon_opt = epsilon_flag;

        if (bounds->parsed()) return cmd_bounds(file, similarity, start, fmt);
        if (mu2k->parsed()) return cmd_mu2k(file, similarity, start, fmt, k_range);
        if (ear->parsed()) return cmd_ear(file, similarity, strategy, root, epsilon_opt);
        if (tsp->parsed()) return cmd_tsp(file, similarity);
        if (exact12->parsed()) return cmd_exact12(file);
        if (oracle->parsed()) {
            if (omu->parsed()) return cmd_oracle_mu(file, similarity);
            if (omu2k->parsed()) return cmd_oracle_mu2k(file, similarity, k);
            if (omaxvalid->parsed()) return cmd_oracle_maxvalid(file, similarity);
            if (oequiv->parsed()) return cmd_oracle_equivalence(file, similarity);
        }
        if (gen->parsed()) {
            WeightedGraph g;
            if (gline->parsed()) g = make_line_instance(pairs, epsilon);
            if (gunit->parsed()) g = make_unit_complete(n);
            if (gonetwo->parsed()) g = make_one_two_graph(n, p1, seed);
            if (gfig->parsed()) g = make_figure1(epsilon);
            write_output(serialize_edge_list(g), out_path);
            return 0;
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
