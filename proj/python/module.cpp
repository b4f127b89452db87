#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gmverify/graph.hpp"
#include "gmverify/graph6.hpp"
#include "gmverify/homotopy.hpp"
#include "gmverify/linalg.hpp"
#include "gmverify/majorization.hpp"

namespace py = pybind11;
using namespace gmv;

namespace {

std::vector<std::vector<double>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
    }
    return rows;
}

SymMatrix sym_from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw input_error("matrix rows must form a square");
        for (int j = i; j < n; ++j) {
            const double a = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const double b = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (a != b) throw input_error("matrix is not symmetric");
            m.set(i, j, a);
        }
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Laplacian spectrum majorization checks, split-graph bounds, and "
              "invariant-subspace homotopy traces for small graphs";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<hypothesis_error>(m, "HypothesisError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edges", &Graph::from_edge_list, py::arg("n"), py::arg("edges"))
        .def_static("from_mask", &Graph::from_edge_mask, py::arg("n"), py::arg("mask"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("degrees", [](const Graph& g) { return degree_sequence(g); })
        .def("complement", &Graph::complement)
        .def("with_edge", &Graph::with_edge)
        .def("without_edge", &Graph::without_edge)
        .def("edge_mask", &Graph::edge_mask)
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ", g6='"
               << to_graph6(g) << "')";
            return os.str();
        });

    m.def("conjugate_sequence", &conjugate_sequence, py::arg("values"), py::arg("length"));
    m.def("complete_split", &complete_split, py::arg("clique_size"), py::arg("coclique_size"));
    m.def("labeled_graph_count", &labeled_graph_count);

    py::class_<SplitPartition>(m, "SplitPartition")
        .def_readonly("clique", &SplitPartition::clique)
        .def_readonly("coclique", &SplitPartition::coclique)
        .def_readonly("delta", &SplitPartition::delta)
        .def_readonly("d1", &SplitPartition::d1)
        .def_readonly("d2", &SplitPartition::d2)
        .def_property_readonly("N", &SplitPartition::clique_size)
        .def_property_readonly("M", &SplitPartition::coclique_size)
        .def("cross", &SplitPartition::cross);

    m.def("split_partition", &split_partition);
    m.def("make_split_partition", &make_split_partition);
    m.def("validate_split_partition", &validate_split_partition);
    m.def("tracking_partition", &tracking_partition, py::arg("g"), py::arg("tol") = 1e-8);

    m.def("laplacian", [](const Graph& g) { return matrix_rows(laplacian(g).dense()); });
    m.def("spectrum", [](const Graph& g) { return laplacian_spectrum(g).values; });
    m.def("eigh", [](const std::vector<std::vector<double>>& rows) {
        const EigDecomp e = eigh(sym_from_rows(rows));
        return py::make_tuple(e.values, matrix_rows(e.vectors));
    });
    m.def("quadratic_form",
          [](const std::vector<std::vector<double>>& rows, const std::vector<double>& x) {
              return quadratic_form(sym_from_rows(rows), x);
          });

    py::class_<MajorizationReport>(m, "MajorizationReport")
        .def_readonly("prefix_slack", &MajorizationReport::prefix_slack)
        .def_readonly("sum_gap", &MajorizationReport::sum_gap)
        .def_readonly("holds", &MajorizationReport::holds)
        .def_readonly("first_violation", &MajorizationReport::first_violation);

    m.def(
        "majorizes",
        [](const std::vector<double>& x, const std::vector<double>& y, double tol) {
            return majorizes(std::span<const double>(x), std::span<const double>(y), tol);
        },
        py::arg("x"), py::arg("y"), py::arg("tol") = kCheckTol);

    py::class_<ConjectureReport>(m, "ConjectureReport")
        .def_readonly("graph_id", &ConjectureReport::graph_id)
        .def_readonly("spectrum", &ConjectureReport::spectrum)
        .def_readonly("dprime", &ConjectureReport::dprime)
        .def_readonly("report", &ConjectureReport::report)
        .def_readonly("margins", &ConjectureReport::margins);

    m.def("check_grone_merris", &check_grone_merris, py::arg("g"), py::arg("tol") = kCheckTol);
    m.def("check_double_majorization", &check_double_majorization, py::arg("g"),
          py::arg("tol") = kCheckTol);
    m.def("check_grone_bound", &check_grone_bound, py::arg("g"), py::arg("tol") = kCheckTol);
    m.def(
        "check_fan",
        [](const std::vector<std::vector<double>>& h1, const std::vector<std::vector<double>>& h2,
           double tol) { return check_fan(sym_from_rows(h1), sym_from_rows(h2), tol); },
        py::arg("h1"), py::arg("h2"), py::arg("tol") = kCheckTol);
    m.def("check_complement_duality", &check_complement_duality, py::arg("g"),
          py::arg("tol") = kCheckTol);
    m.def("grone_merris_margins", &grone_merris_margins);
    m.def("check_prefix_duality", &check_prefix_duality, py::arg("g"), py::arg("k"),
          py::arg("tol") = kCheckTol);
    m.def("check_split_bounds", &check_split_bounds, py::arg("g"), py::arg("p"),
          py::arg("tol") = kCheckTol);
    m.def("check_degree_threshold_lemma", &check_degree_threshold_lemma, py::arg("g"), py::arg("k"),
          py::arg("tol") = kCheckTol);
    m.def("split_closure", &split_closure);

    py::class_<SplitClosureReport>(m, "SplitClosureReport")
        .def_readonly("closure", &SplitClosureReport::closure)
        .def_readonly("is_split", &SplitClosureReport::is_split)
        .def_readonly("stated_partition_valid", &SplitClosureReport::stated_partition_valid)
        .def_readonly("clique_ok", &SplitClosureReport::clique_ok)
        .def_readonly("coclique_degree_ok", &SplitClosureReport::coclique_degree_ok)
        .def_readonly("dprime_prefix_preserved", &SplitClosureReport::dprime_prefix_preserved)
        .def_readonly("eigen_monotone", &SplitClosureReport::eigen_monotone);

    m.def("check_split_closure", &check_split_closure, py::arg("g"), py::arg("k"),
          py::arg("tol") = kCheckTol);

    m.def("complete_split_spectrum", &complete_split_spectrum, py::arg("clique_size"),
          py::arg("coclique_size"));

    py::class_<TracePoint>(m, "TracePoint")
        .def_readonly("alpha", &TracePoint::alpha)
        .def_property_readonly("v", [](const TracePoint& p) { return matrix_rows(p.v); })
        .def_readonly("lambda_n", &TracePoint::lambda_n)
        .def_readonly("lambda_n1", &TracePoint::lambda_n1)
        .def_readonly("gap", &TracePoint::gap)
        .def_readonly("eq1_residual", &TracePoint::eq1_residual)
        .def_readonly("omega_entry_margin", &TracePoint::omega_entry_margin)
        .def_readonly("omega_colsum_margin", &TracePoint::omega_colsum_margin)
        .def_readonly("x_trace", &TracePoint::x_trace)
        .def_readonly("sum_top", &TracePoint::sum_top);

    m.def(
        "track",
        [](const Graph& g, const SplitPartition& p, int grid) {
            return track(make_homotopy_problem(g, p, grid)).points;
        },
        py::arg("g"), py::arg("p"), py::arg("grid") = 101);

    py::enum_<KeyLemmaBranch>(m, "KeyLemmaBranch")
        .value("strict", KeyLemmaBranch::strict)
        .value("equality", KeyLemmaBranch::equality);

    py::class_<KeyLemmaReport>(m, "KeyLemmaReport")
        .def_readonly("branch", &KeyLemmaReport::branch)
        .def_readonly("sum_top", &KeyLemmaReport::sum_top)
        .def_readonly("dprime_prefix", &KeyLemmaReport::dprime_prefix)
        .def_readonly("n2_plus_tr_d1", &KeyLemmaReport::n2_plus_tr_d1)
        .def_readonly("trace_x1", &KeyLemmaReport::trace_x1)
        .def_readonly("trace_av1", &KeyLemmaReport::trace_av1)
        .def_readonly("inequality_holds", &KeyLemmaReport::inequality_holds)
        .def_readonly("trace_identity_holds", &KeyLemmaReport::trace_identity_holds)
        .def_readonly("bound_holds", &KeyLemmaReport::bound_holds)
        .def_readonly("identity_exact", &KeyLemmaReport::identity_exact)
        .def_readonly("consistent", &KeyLemmaReport::consistent);

    m.def(
        "key_lemma_check",
        [](const Graph& g, const SplitPartition& p) { return key_lemma_check(g, p); },
        py::arg("g"), py::arg("p"));
}
