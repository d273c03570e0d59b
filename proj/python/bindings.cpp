// Python bindings. Results cross the boundary as JSON so the Python side
// sees the same shapes the CLI prints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "annigraph/classify.hpp"
#include "annigraph/genus.hpp"
#include "annigraph/ring_spec.hpp"
#include "annigraph/verify.hpp"

namespace py = pybind11;
namespace ag = annigraph;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ag::SimpleGraph graph_of(const std::string& spec, const std::string& kind) {
  auto obj = ag::resolve(ag::parse_ring_spec(spec));
  if (auto* g = std::get_if<ag::SimpleGraph>(&obj)) return *g;
  const auto& r = std::get<ag::FiniteRing>(obj);
  if (kind == "ag") return ag::build_ag(r, ag::all_ideals(r));
  if (kind == "zdg") return ag::build_zero_divisor_graph(r);
  throw ag::Error("unknown kind '" + kind + "' (expected ag or zdg)");
}

ag::SimpleGraph graph_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  ag::SimpleGraph g(n, {});
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (v >= n) throw ag::Error("edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

ag::GenusOptions options(std::uint64_t budget_nodes, std::uint64_t budget_ms, unsigned threads,
                         bool bounds_only) {
  ag::GenusOptions o;
  o.budget_nodes = budget_nodes;
  o.budget_ms = budget_ms;
  o.threads = std::max(1u, threads);
  o.bounds_only = bounds_only;
  return o;
}

nlohmann::json genus_json(const ag::SimpleGraph& g, const ag::GenusOptions& o) {
  ag::GenusResult r;
  {
    py::gil_scoped_release release;
    r = ag::genus_exact(g, o);
  }
  return ag::genus_result_to_json(r);
}

}  // namespace

PYBIND11_MODULE(_annigraph, m) {
  py::register_exception<ag::Error>(m, "AnnigraphError", PyExc_ValueError);

  const ag::GenusOptions d;

  m.def("ring_info", [](const std::string& spec) {
    const auto r = ag::resolve_ring(ag::parse_ring_spec(spec));
    const auto lattice = ag::all_ideals(r);
    return to_python(ag::classification_to_json(ag::classify(r, lattice), lattice));
  }, py::arg("spec"));

  m.def("ideals", [](const std::string& spec) {
    return to_python(ag::lattice_to_json(ag::all_ideals(ag::resolve_ring(ag::parse_ring_spec(spec)))));
  }, py::arg("spec"));

  m.def("graph", [](const std::string& spec, const std::string& kind) {
    return to_python(ag::graph_to_json(graph_of(spec, kind)));
  }, py::arg("spec"), py::arg("kind") = "ag");

  m.def("dot", [](const std::string& spec, const std::string& kind) { return ag::to_dot(graph_of(spec, kind)); },
        py::arg("spec"), py::arg("kind") = "ag");

  m.def("genus", [](const std::string& spec, const std::string& kind, std::uint64_t budget_nodes,
                    std::uint64_t budget_ms, unsigned threads, bool bounds_only) {
    return to_python(genus_json(graph_of(spec, kind), options(budget_nodes, budget_ms, threads, bounds_only)));
  }, py::arg("spec"), py::arg("kind") = "ag", py::arg("budget_nodes") = d.budget_nodes,
     py::arg("budget_ms") = d.budget_ms, py::arg("threads") = 1, py::arg("bounds_only") = false);

  m.def("graph_genus", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          std::uint64_t budget_nodes, std::uint64_t budget_ms, unsigned threads, bool bounds_only) {
    return to_python(genus_json(graph_from_edges(n, edges), options(budget_nodes, budget_ms, threads, bounds_only)));
  }, py::arg("n"), py::arg("edges"), py::arg("budget_nodes") = d.budget_nodes, py::arg("budget_ms") = d.budget_ms,
     py::arg("threads") = 1, py::arg("bounds_only") = false);

  m.def("is_planar", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    return ag::is_planar(graph_from_edges(n, edges));
  }, py::arg("n"), py::arg("edges"));

  m.def("verify", [](std::optional<std::vector<std::string>> specs, const std::string& suite, unsigned threads) {
    std::vector<ag::CorpusEntry> corpus;
    if (specs)
      for (const auto& s : *specs) corpus.push_back({s, s});
    else
      corpus = ag::builtin_corpus();
    ag::SuiteOptions o;
    o.suite = ag::parse_suite(suite);
    o.threads = std::max(1u, threads);
    ag::SuiteReport rep;
    {
      py::gil_scoped_release release;
      rep = ag::run_suite(corpus, o);
    }
    nlohmann::json j = {{"ok", rep.ok()}, {"passed", rep.passed}, {"failed", rep.failed},
                        {"skipped", rep.skipped}, {"results", ag::report_json(rep)}};
    return to_python(j);
  }, py::arg("specs") = py::none(), py::arg("suite") = "all", py::arg("threads") = 1);

  m.def("corpus", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : ag::builtin_corpus()) out.emplace_back(e.name, e.spec);
    return out;
  });

  m.def("catalog", &ag::catalog_ring_names);
  m.def("canonical_spec", [](const std::string& s) { return ag::to_string(ag::parse_ring_spec(s)); },
        py::arg("spec"));
}
