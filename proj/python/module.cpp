#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <fstream>

#include "sgc/bench.hpp"
#include "sgc/coarsen.hpp"
#include "sgc/error.hpp"
#include "sgc/fitness.hpp"
#include "sgc/io.hpp"
#include "sgc/lift.hpp"
#include "sgc/spectral.hpp"

namespace py = pybind11;
using namespace sgc;

namespace {

py::array_t<double> to_numpy(const DenseMatrix& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
  return out;
}

py::array_t<double> to_numpy(std::span<const double> v) {
  py::array_t<double> out(v.size());
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

std::vector<double> as_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 1) throw InvalidArgument("expected a one-dimensional array");
  return {a.data(), a.data() + a.size()};
}

GraphFormat format_from(const std::string& name) {
  const auto f = parse_graph_format(name);
  if (!f) throw InvalidArgument("unknown format '" + name + "'");
  return *f;
}

std::vector<WeightedEdge> edges_from(const std::vector<std::tuple<NodeId, NodeId, double>>& edges) {
  std::vector<WeightedEdge> out;
  out.reserve(edges.size());
  for (const auto& [u, v, w] : edges) out.push_back({u, v, w});
  return out;
}

py::tuple edge_tuple(const WeightedEdge& e) { return py::make_tuple(e.u, e.v, e.weight); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectrum-preserving graph coarsening";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgumentError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges) {
            return Graph::from_edges(n, edges_from(edges));
          },
          py::arg("n"), py::arg("edges"), "Build from (u, v, weight) triples; duplicate pairs are summed.")
      .def_property_readonly("num_nodes", &Graph::num_nodes)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("has_self_loops", &Graph::has_self_loops)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("degrees", [](const Graph& g) { return to_numpy(g.degrees()); })
      .def("structural_degree", &Graph::structural_degree, py::arg("v"))
      .def("weight", &Graph::weight, py::arg("u"), py::arg("v"))
      .def("neighbors",
           [](const Graph& g, NodeId v) {
             if (v >= g.num_nodes()) throw InvalidArgument("node id out of range");
             const auto n = g.neighbors(v);
             return std::vector<NodeId>(n.begin(), n.end());
           })
      .def("edges",
           [](const Graph& g) {
             py::list out;
             for (const auto& e : g.edges()) out.append(edge_tuple(e));
             return out;
           })
      .def("is_connected", [](const Graph& g) { return validate(g).connected; })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<sgc.Graph n=" + std::to_string(g.num_nodes()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_static(
          "from_labels", [](const std::vector<std::int64_t>& labels) { return Partition::from_labels(labels); },
          py::arg("labels"))
      .def_property_readonly("num_nodes", &Partition::num_nodes)
      .def_property_readonly("live", &Partition::live)
      .def("unite", &Partition::unite, py::arg("u"), py::arg("v"))
      .def("find", &Partition::find, py::arg("v"))
      .def("supernode_size", &Partition::supernode_size, py::arg("v"))
      .def("labels", &Partition::labels)
      .def(py::self == py::self);

  py::class_<MergeLog>(m, "MergeLog")
      .def_property_readonly("applied",
                             [](const MergeLog& log) {
                               py::list out;
                               for (const auto& a : log.applied()) out.append(py::make_tuple(a.u, a.v, a.fitness));
                               return out;
                             })
      .def_property_readonly("skipped", &MergeLog::skipped)
      .def_property_readonly("s", &MergeLog::s)
      .def_property_readonly("eps_max", &MergeLog::eps_max);

  py::class_<CoarsenResult>(m, "CoarsenResult")
      .def_readonly("partition", &CoarsenResult::partition)
      .def_readonly("coarse", &CoarsenResult::coarse)
      .def_readonly("log", &CoarsenResult::log)
      .def_property_readonly("bound", [](const CoarsenResult& r) { return spectral_error_bound(r.log); });

  py::class_<LoadedGraph>(m, "LoadedGraph")
      .def_readonly("graph", &LoadedGraph::graph)
      .def_readonly("original_ids", &LoadedGraph::original_ids)
      .def_readonly("coordinates", &LoadedGraph::coordinates);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("gap", &VerifyReport::gap)
      .def_readonly("bound", &VerifyReport::bound)
      .def_readonly("satisfied", &VerifyReport::satisfied)
      .def_readonly("k", &VerifyReport::k)
      .def_property_readonly("original_eigenvalues",
                             [](const VerifyReport& r) { return to_numpy(r.original.eigenvalues); })
      .def_property_readonly("lifted_eigenvalues", [](const VerifyReport& r) { return to_numpy(r.lifted.eigenvalues); })
      .def_property_readonly("alignment", [](const VerifyReport& r) { return to_numpy(r.alignment); });

  // io
  m.def(
      "load_graph", [](const std::filesystem::path& path, const std::string& format) {
        return load_graph_file(path, format_from(format));
      },
      py::arg("path"), py::arg("format"),
      "Load snap-edgelist, matrix-market, ply-ascii or weighted-edgelist files.");
  m.def(
      "save_graph",
      [](const Graph& g, const std::filesystem::path& path) {
        write_file(path, [&](std::ostream& s) { write_weighted_edgelist(s, g); });
      },
      py::arg("graph"), py::arg("path"));

  // fitness and coarsening
  m.def("edge_fitness", &edge_fitness, py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def(
      "all_fitness",
      [](const Graph& g, std::size_t threads) {
        py::list out;
        for (const auto& e : all_fitness(g, threads)) out.append(py::make_tuple(e.u, e.v, e.value));
        return out;
      },
      py::arg("graph"), py::arg("threads") = 1, "Sorted (u, v, fitness) for every proper edge.");
  m.def(
      "approximate_greedy_coarsen",
      [](const Graph& g, std::size_t n_c, std::size_t threads) {
        py::gil_scoped_release release;
        return approximate_greedy_coarsen(g, n_c, threads);
      },
      py::arg("graph"), py::arg("n_c"), py::arg("threads") = 1);
  m.def(
      "explicit_greedy_coarsen",
      [](const Graph& g, std::size_t n_c) {
        py::gil_scoped_release release;
        return explicit_greedy_coarsen(g, n_c);
      },
      py::arg("graph"), py::arg("n_c"));
  m.def("spectral_error_bound", &spectral_error_bound, py::arg("log"));
  m.def("contract", py::overload_cast<const Graph&, const Partition&>(&contract), py::arg("graph"),
        py::arg("partition"));
  m.def(
      "lift", [](const Graph& coarse, const Partition& part, std::size_t n) { return lift(coarse, part, n).graph; },
      py::arg("coarse"), py::arg("partition"), py::arg("n"));
  m.def("nodes_for_ratio", &nodes_for_ratio, py::arg("n"), py::arg("ratio"));

  // spectra
  m.def(
      "normalized_laplacian",
      [](const Graph& g, std::size_t cap) { return to_numpy(normalized_laplacian(g, cap)); }, py::arg("graph"),
      py::arg("cap") = kDefaultDenseCap);
  m.def(
      "eigenvalues",
      [](const Graph& g, std::size_t cap) {
        std::vector<double> values;
        {
          py::gil_scoped_release release;
          values = eigvals_sym(normalized_laplacian(g, cap));
        }
        return to_numpy(values);
      },
      py::arg("graph"), py::arg("cap") = kDefaultDenseCap, "Ascending normalized-Laplacian eigenvalues.");
  m.def(
      "spectrum",
      [](const Graph& g, std::size_t cap) {
        Spectrum s;
        {
          py::gil_scoped_release release;
          s = eig_sym(normalized_laplacian(g, cap));
        }
        return py::make_tuple(to_numpy(s.eigenvalues), to_numpy(s.vectors));
      },
      py::arg("graph"), py::arg("cap") = kDefaultDenseCap,
      "(eigenvalues, vectors) with row i of vectors the eigenvector of eigenvalue i.");
  m.def(
      "eigenvalue_gap",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
         const py::array_t<double, py::array::c_style | py::array::forcecast>& b) {
        return eigenvalue_gap(as_vector(a), as_vector(b));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "verify",
      [](const Graph& g, const CoarsenResult& r, std::size_t k, std::size_t cap) {
        py::gil_scoped_release release;
        return verify(g, r, k, cap);
      },
      py::arg("graph"), py::arg("result"), py::arg("k"), py::arg("cap") = kDefaultDenseCap);
  m.def(
      "verify_partition",
      [](const Graph& g, const Partition& part, std::size_t k, std::size_t cap) {
        py::gil_scoped_release release;
        return verify_partition(g, part, nullptr, k, cap);
      },
      py::arg("graph"), py::arg("partition"), py::arg("k"), py::arg("cap") = kDefaultDenseCap);

  // generators and work model
  m.def("gen_grid", &gen_grid, py::arg("rows"), py::arg("cols"));
  m.def("gen_powerlaw", &gen_powerlaw, py::arg("n"), py::arg("attach"), py::arg("seed"));
  m.def("gen_erdos_renyi", &gen_erdos_renyi, py::arg("n"), py::arg("p"), py::arg("weight_lo") = 1.0,
        py::arg("weight_hi") = 1.0, py::arg("seed") = 0);
  m.def("permute_nodes", &permute_nodes, py::arg("graph"), py::arg("seed"));
  m.def("second_moment", &second_moment, py::arg("graph"));
  m.def("sum_squared_degrees", &sum_squared_degrees, py::arg("graph"));
  m.def("chunk_work", &chunk_work, py::arg("graph"), py::arg("threads"));
  m.def("imbalance", py::overload_cast<const Graph&, std::size_t>(&imbalance), py::arg("graph"), py::arg("threads"));
  m.def("result_hash", &result_hash, py::arg("result"));
}
