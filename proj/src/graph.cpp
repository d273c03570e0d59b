#include "annigraph/graph.hpp"

#include <algorithm>
#include <numeric>

namespace annigraph {

SimpleGraph::SimpleGraph(std::vector<std::string> labels, std::string name)
    : name_(std::move(name)), labels_(std::move(labels)), adj_(labels_.size()) {}

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges, std::string name)
    : name_(std::move(name)), labels_(n), adj_(n) {
  for (std::size_t v = 0; v < n; ++v) labels_[v] = std::to_string(v);
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= labels_.size() || v >= labels_.size()) throw Error("edge endpoint out of range");
  if (u == v) throw Error("self-loops are not allowed in a simple graph");
  if (has_edge(u, v)) throw Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  const Edge e = std::minmax(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::vector<Vertex>> SimpleGraph::components() const {
  std::vector<int> comp(vertex_count(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : adj_[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<Vertex>& vertices) const {
  std::vector<long> pos(vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    pos[vertices[i]] = static_cast<long>(i);
    labels.push_back(labels_[vertices[i]]);
  }
  SimpleGraph g(std::move(labels), name_);
  for (auto [u, v] : edges())
    if (pos[u] >= 0 && pos[v] >= 0) g.add_edge(static_cast<Vertex>(pos[u]), static_cast<Vertex>(pos[v]));
  return g;
}

SimpleGraph SimpleGraph::without_edge(Vertex u, Vertex v) const {
  SimpleGraph g(labels_, name_);
  const Edge drop = std::minmax(u, v);
  for (const Edge& e : edges())
    if (e != drop) g.add_edge(e.first, e.second);
  return g;
}

SimpleGraph SimpleGraph::disjoint_union(const SimpleGraph& other) const {
  std::vector<std::string> labels = labels_;
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  SimpleGraph g(std::move(labels), name_);
  for (const Edge& e : edges()) g.add_edge(e.first, e.second);
  const std::size_t off = vertex_count();
  for (const Edge& e : other.edges()) g.add_edge(e.first + off, e.second + off);
  return g;
}

bool SimpleGraph::has_triangle() const {
  for (const Edge& e : edges())
    for (Vertex w : adj_[e.first])
      if (w != e.second && has_edge(w, e.second)) return true;
  return false;
}

std::vector<std::size_t> ag_vertex_ideals(const IdealLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < lattice.size(); ++k)
    if (!annihilator(lattice[k]).is_zero()) out.push_back(k);
  return out;
}

SimpleGraph build_ag(const FiniteRing& r, const IdealLattice& lattice) {
  if (!lattice.ring().same_as(r)) throw Error("lattice belongs to a different ring");
  const std::vector<std::size_t> verts = ag_vertex_ideals(lattice);
  std::vector<std::string> labels;
  for (std::size_t k : verts) labels.push_back(lattice.label(k));
  SimpleGraph g(std::move(labels), "AG");
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (ideal_product(lattice[verts[a]], lattice[verts[b]]).is_zero()) g.add_edge(a, b);
  return g;
}

SimpleGraph build_zero_divisor_graph(const FiniteRing& r) {
  std::vector<Elem> zd;
  for (Elem x = 1; x < r.size(); ++x)
    for (Elem y = 1; y < r.size(); ++y)
      if (r.mul(x, y) == 0) {
        zd.push_back(x);
        break;
      }
  std::vector<std::string> labels;
  for (Elem x : zd) labels.push_back(r.label(x));
  SimpleGraph g(std::move(labels), "ZDG");
  for (std::size_t a = 0; a < zd.size(); ++a)
    for (std::size_t b = a + 1; b < zd.size(); ++b)
      if (r.mul(zd[a], zd[b]) == 0) g.add_edge(a, b);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  if (n < 1) throw Error("K_n requires n >= 1");
  SimpleGraph g(n, {}, "K" + std::to_string(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error("K_{m,n} requires m, n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j < n; ++j) labels.push_back("b" + std::to_string(j));
  SimpleGraph g(std::move(labels), "K" + std::to_string(m) + "_" + std::to_string(n));
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

namespace {

struct BicliqueSearch {
  const SimpleGraph& g;
  std::size_t m, n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<Vertex> chosen;
  std::optional<BipartiteWitness> found;

  // `common` is the common neighbourhood of `chosen`; it never meets `chosen`
  // because a vertex is not its own neighbour.
  bool extend(std::size_t start, const std::vector<Vertex>& common) {
    if (chosen.size() == m) {
      found = BipartiteWitness{chosen, std::vector<Vertex>(common.begin(), common.begin() + static_cast<long>(n))};
      return true;
    }
    for (Vertex v = start; v < g.vertex_count(); ++v) {
      if (g.degree(v) < n) continue;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      std::vector<Vertex> next;
      if (chosen.empty()) {
        next = g.neighbors(v);
      } else {
        std::set_intersection(common.begin(), common.end(), g.neighbors(v).begin(),
                              g.neighbors(v).end(), std::back_inserter(next));
      }
      if (next.size() < n) continue;
      chosen.push_back(v);
      if (extend(v + 1, next)) return true;
      chosen.pop_back();
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

BipartiteSearchResult find_complete_bipartite_subgraph(const SimpleGraph& g, std::size_t m,
                                                       std::size_t n, std::uint64_t node_budget) {
  if (m < 1 || n < 1) throw Error("K_{m,n} search requires m, n >= 1");
  if (m > n) std::swap(m, n);
  BicliqueSearch s{g, m, n, node_budget, 0, false, {}, std::nullopt};
  BipartiteSearchResult out;
  s.extend(0, {});
  out.nodes = s.nodes;
  if (s.found) {
    out.outcome = SearchOutcome::found;
    out.witness = std::move(s.found);
  } else {
    out.outcome = s.exhausted ? SearchOutcome::unknown : SearchOutcome::none;
  }
  return out;
}

std::string to_dot(const SimpleGraph& g) {
  std::string out = "graph " + g.name() + " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += "  \"" + g.label(v) + "\";\n";
  for (auto [u, v] : g.edges()) out += "  \"" + g.label(u) + "\" -- \"" + g.label(v) + "\";\n";
  out += "}\n";
  return out;
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"name", g.name()}, {"vertices", g.labels()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  try {
    SimpleGraph g(j.at("vertices").get<std::vector<std::string>>(), j.value("name", std::string("G")));
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace annigraph
