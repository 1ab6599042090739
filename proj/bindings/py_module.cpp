// Python bindings for the core operations: graph loading, metric closure,
// greedy bounds, matchings, tours, ear bounds, (1,2) exact values, oracles,
// and the synthetic instance generators.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tjoin/ears.hpp"
#include "tjoin/greedy.hpp"
#include "tjoin/instances.hpp"
#include "tjoin/matching.hpp"
#include "tjoin/one_two.hpp"
#include "tjoin/oracle.hpp"
#include "tjoin/report.hpp"
#include "tjoin/tsp.hpp"

namespace py = pybind11;
using namespace tjoin;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bounds and exact algorithms for weighted max-min T-join problems";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

    py::class_<Edge>(m, "Edge")
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def_readonly("w", &Edge::w);

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def_readonly("n", &WeightedGraph::n)
        .def_readonly("labels", &WeightedGraph::labels)
        .def_readonly("edges", &WeightedGraph::edges)
        .def("edge_weight", &WeightedGraph::edge_weight)
        .def("total_weight", &WeightedGraph::total_weight);

    py::class_<DistanceMatrix>(m, "DistanceMatrix")
        .def_readonly("n", &DistanceMatrix::n)
        .def("at", static_cast<double (DistanceMatrix::*)(int, int) const>(&DistanceMatrix::at));

    py::class_<BridgeContraction>(m, "BridgeContraction")
        .def_readonly("contracted", &BridgeContraction::contracted)
        .def_readonly("bridge_weight", &BridgeContraction::bridge_weight)
        .def_readonly("vertex_map", &BridgeContraction::vertex_map);

    py::class_<Matching>(m, "Matching")
        .def_readonly("pairs", &Matching::pairs)
        .def_readonly("cost", &Matching::cost);

    py::class_<GreedyOrdering>(m, "GreedyOrdering")
        .def_readonly("order", &GreedyOrdering::order)
        .def_readonly("step_distance", &GreedyOrdering::step_distance);

    py::class_<PrefixBounds>(m, "PrefixBounds")
        .def_readonly("k", &PrefixBounds::k)
        .def_readonly("mwm_prefix", &PrefixBounds::mwm_prefix)
        .def_readonly("opt_prefix", &PrefixBounds::opt_prefix)
        .def_readonly("harmonic_ub", &PrefixBounds::harmonic_ub);

    py::class_<TJoinBounds>(m, "TJoinBounds")
        .def_readonly("lower", &TJoinBounds::lower)
        .def_readonly("upper", &TJoinBounds::upper)
        .def_readonly("selected", &TJoinBounds::selected);

    py::class_<Tour>(m, "Tour")
        .def_readonly("order", &Tour::order)
        .def_readonly("cost", &Tour::cost);

    py::class_<Ear>(m, "Ear")
        .def_readonly("vertices", &Ear::vertices)
        .def_readonly("edge_weights", &Ear::edge_weights)
        .def_readonly("is_trivial", &Ear::is_trivial)
        .def("is_cycle", &Ear::is_cycle);

    py::class_<EarDecomposition>(m, "EarDecomposition")
        .def_readonly("ears", &EarDecomposition::ears);

    py::class_<EarBound>(m, "EarBound")
        .def_readonly("bound", &EarBound::bound)
        .def_readonly("decomposition", &EarBound::decomposition)
        .def_readonly("bridge_weight", &EarBound::bridge_weight)
        .def_readonly("strategy", &EarBound::strategy);

    py::class_<OneTwoInstance>(m, "OneTwoInstance")
        .def_readonly("n", &OneTwoInstance::n)
        .def_readonly("weight_one", &OneTwoInstance::weight_one)
        .def("weight", &OneTwoInstance::weight)
        .def("to_distance_matrix", &OneTwoInstance::to_distance_matrix);

    py::class_<MuOneTwo>(m, "MuOneTwo")
        .def_readonly("value", &MuOneTwo::value)
        .def_readonly("witness", &MuOneTwo::witness);

    py::class_<MuResult>(m, "MuResult")
        .def_readonly("value", &MuResult::value)
        .def_readonly("subset", &MuResult::subset);

    py::class_<ValidEdgeSet>(m, "ValidEdgeSet")
        .def_readonly("edge_indices", &ValidEdgeSet::edge_indices)
        .def_readonly("weight", &ValidEdgeSet::weight)
        .def_readonly("odd_vertices", &ValidEdgeSet::odd_vertices);

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("max_valid_weight", &EquivalenceReport::max_valid_weight)
        .def_readonly("mu_value", &EquivalenceReport::mu_value)
        .def_readonly("odd_matching_cost", &EquivalenceReport::odd_matching_cost)
        .def_readonly("consistent", &EquivalenceReport::consistent);

    m.def("load_edge_list", &load_edge_list, py::arg("text"));
    m.def("load_similarity_list", &load_similarity_list, py::arg("text"));
    m.def("serialize_edge_list", &serialize_edge_list, py::arg("graph"));
    m.def("similarity_to_distance", &similarity_to_distance, py::arg("counts"));
    m.def("metric_closure", &metric_closure, py::arg("graph"));
    m.def("verify_metric_ok",
          [](const DistanceMatrix& d) { return verify_metric(d).empty(); }, py::arg("d"));
    m.def("contract_bridges", &contract_bridges, py::arg("graph"));

    m.def("min_weight_perfect_matching", &min_weight_perfect_matching, py::arg("d"),
          py::arg("subset"));
    m.def("max_cardinality_matching", &max_cardinality_matching, py::arg("graph"));
    m.def("brute_force_matching", &brute_force_matching, py::arg("d"), py::arg("subset"));

    m.def("harmonic", &harmonic, py::arg("m"));
    m.def("greedy_ordering", &greedy_ordering, py::arg("d"), py::arg("start") = 0);
    m.def("prefix_matching_sequence", &prefix_matching_sequence, py::arg("d"), py::arg("ordering"));
    m.def("tjoin_bounds", &tjoin_bounds, py::arg("d"), py::arg("start") = 0);

    m.def("christofides", &christofides, py::arg("d"));
    m.def("brute_force_tsp", &brute_force_tsp, py::arg("d"));
    m.def("tsp_half_upper_bound", &tsp_half_upper_bound, py::arg("d"));

    m.def("ear_max", &ear_max, py::arg("edge_weights"),
          py::arg("epsilon") = std::optional<double>());
    m.def(
        "ear_upper_bound",
        [](const WeightedGraph& g, const std::string& strategy, std::optional<double> epsilon,
           int dfs_root) {
            EarStrategy s = strategy == "hamiltonian-first" ? EarStrategy::HamiltonianFirst
                                                            : EarStrategy::Dfs;
            return ear_upper_bound(g, s, epsilon, dfs_root);
        },
        py::arg("graph"), py::arg("strategy") = "dfs",
        py::arg("epsilon") = std::optional<double>(), py::arg("dfs_root") = 0);
    m.def("best_ear_upper_bound", &best_ear_upper_bound, py::arg("graph"),
          py::arg("epsilon") = std::optional<double>());

    m.def("validate_one_two", &validate_one_two, py::arg("graph"));
    m.def("mu_12", &mu_12, py::arg("instance"));

    m.def("brute_force_mu", &brute_force_mu, py::arg("d"));
    m.def("brute_force_mu_2k", &brute_force_mu_2k, py::arg("d"), py::arg("k"));
    m.def("brute_force_max_valid_set", &brute_force_max_valid_set, py::arg("graph"));
    m.def("is_valid_edge_set", &is_valid_edge_set, py::arg("graph"), py::arg("edge_indices"));
    m.def("check_formulation_equivalence", &check_formulation_equivalence, py::arg("graph"));

    m.def("make_line_instance", &make_line_instance, py::arg("pairs"), py::arg("epsilon"));
    m.def("make_unit_complete", &make_unit_complete, py::arg("n"));
    m.def("make_figure1", &make_figure1, py::arg("epsilon"));
    m.def("make_one_two_graph", &make_one_two_graph, py::arg("n"), py::arg("p1"), py::arg("seed"));
    m.def("make_random_metric", &make_random_metric, py::arg("n"), py::arg("seed"));
}
