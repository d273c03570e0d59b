#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "annigraph/ideal.hpp"

namespace annigraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

/// Undirected simple graph with labelled vertices.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> labels, std::string name = "G");
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges, std::string name = "G");

  /// Adds {u, v}; self-loops and duplicates are rejected.
  void add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Edges sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Connected components as sorted vertex lists, ordered by least vertex.
  std::vector<std::vector<Vertex>> components() const;
  /// Subgraph induced on `vertices` (relabelled in the given order).
  SimpleGraph induced(const std::vector<Vertex>& vertices) const;
  SimpleGraph without_edge(Vertex u, Vertex v) const;
  /// Disjoint union; the vertices of `other` follow those of this graph.
  SimpleGraph disjoint_union(const SimpleGraph& other) const;

  bool has_triangle() const;

 private:
  std::string name_ = "G";
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;  // sorted
  std::vector<Edge> edges_;  // sorted
};

/// Annihilating-ideal graph: nonzero annihilating ideals, I -- J iff I != J
/// and IJ = (0). Vertices follow lattice order and carry lattice labels.
SimpleGraph build_ag(const FiniteRing& r, const IdealLattice& lattice);

/// Lattice indices of the vertices of build_ag, in vertex order.
std::vector<std::size_t> ag_vertex_ideals(const IdealLattice& lattice);

/// Zero-divisor graph: nonzero zero divisors, x -- y iff x != y and xy = 0.
SimpleGraph build_zero_divisor_graph(const FiniteRing& r);

SimpleGraph complete_graph(std::size_t n);
/// Vertices a0..a{m-1} then b0..b{n-1}.
SimpleGraph complete_bipartite(std::size_t m, std::size_t n);

struct BipartiteWitness {
  std::vector<Vertex> left;   // |left| = m
  std::vector<Vertex> right;  // |right| = n
};

enum class SearchOutcome { found, none, unknown };

struct BipartiteSearchResult {
  SearchOutcome outcome = SearchOutcome::none;
  std::optional<BipartiteWitness> witness;
  std::uint64_t nodes = 0;
};

/// Backtracking search for a (not necessarily induced) K_{m,n} subgraph.
/// Returns `unknown` when more than `node_budget` search nodes are needed.
BipartiteSearchResult find_complete_bipartite_subgraph(const SimpleGraph& g, std::size_t m,
                                                       std::size_t n,
                                                       std::uint64_t node_budget = 10'000'000);

std::string to_dot(const SimpleGraph& g);
nlohmann::json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

}  // namespace annigraph
