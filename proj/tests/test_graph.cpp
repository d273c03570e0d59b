#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "annigraph/graph.hpp"
#include "annigraph/ring_spec.hpp"
#include "oracles.hpp"

using namespace annigraph;

namespace {

FiniteRing ring(const std::string& spec) { return resolve_ring(parse_ring_spec(spec)); }

// AG vertex and edge sets as member lists, from the library.
oracle::AgOracle ag_members(const FiniteRing& r) {
  const auto lat = all_ideals(r);
  const auto g = build_ag(r, lat);
  const auto ids = ag_vertex_ideals(lat);
  oracle::AgOracle out;
  for (auto k : ids) out.vertices.push_back(lat[k].members().members());
  for (auto [u, v] : g.edges()) {
    auto a = out.vertices[u], b = out.vertices[v];
    if (b < a) std::swap(a, b);
    out.edges.insert({a, b});
  }
  return out;
}

void check_ag_against_oracle(const std::string& spec) {
  CAPTURE(spec);
  const auto r = ring(spec);
  const auto expected = oracle::ag(r, oracle::ideals(r));
  const auto actual = ag_members(r);
  CHECK(actual.vertices == expected.vertices);
  CHECK(actual.edges == expected.edges);
}

std::set<std::string> vertex_labels(const SimpleGraph& g) { return {g.labels().begin(), g.labels().end()}; }

}  // namespace

TEST_CASE("AG fixtures") {
  const auto z6 = ring("zn:6");
  const auto ag6 = build_ag(z6, all_ideals(z6));
  CHECK(ag6.vertex_count() == 2);
  CHECK(ag6.edge_count() == 1);

  const auto z8 = ring("zn:8");
  const auto ag8 = build_ag(z8, all_ideals(z8));
  CHECK(vertex_labels(ag8) == std::set<std::string>{"(2)", "(4)"});
  CHECK(ag8.edge_count() == 1);

  const auto z12 = ring("zn:12");
  const auto ag12 = build_ag(z12, all_ideals(z12));
  CHECK(vertex_labels(ag12) == std::set<std::string>{"(2)", "(3)", "(4)", "(6)"});
  using E = std::set<std::pair<std::string, std::string>>;
  CHECK(oracle::labelled_edges(ag12) == E{{"(2)", "(6)"}, {"(4)", "(6)"}, {"(3)", "(4)"}});

  for (int p : {2, 3, 5}) {
    const auto r = make_zn(p * p);
    const auto g = build_ag(r, all_ideals(r));
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }
  for (const char* f : {"cat:f2", "cat:f3", "cat:f4", "cat:f5", "cat:f7", "cat:f8", "cat:f9"}) {
    const auto r = ring(f);
    CHECK(build_ag(r, all_ideals(r)).vertex_count() == 0);
  }
}

TEST_CASE("AG agrees with the pairwise-product oracle") {
  for (const auto& e : builtin_corpus()) check_ag_against_oracle(e.spec);
  check_ag_against_oracle("cat:f2xy_xy_y2x3");
}

TEST_CASE("AG of F_2[x,y]/(x^2,y^2) is a star at (xy)") {
  const auto r = ring("cat:f2xy_x2y2");
  const auto g = build_ag(r, all_ideals(r));
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.label(0) == "(xy)");
  CHECK(g.degree(0) == 4);
}

TEST_CASE("zero-divisor graph") {
  const auto g6 = build_zero_divisor_graph(make_zn(6));
  CHECK(g6.labels() == std::vector<std::string>{"2", "3", "4"});
  CHECK(oracle::labelled_edges(g6) == std::set<std::pair<std::string, std::string>>{{"2", "3"}, {"3", "4"}});
  CHECK(build_zero_divisor_graph(ring("cat:f8")).vertex_count() == 0);
  const auto g4 = build_zero_divisor_graph(make_zn(4));
  CHECK(g4.vertex_count() == 1);
  CHECK(g4.edge_count() == 0);

  // direct number-theoretic oracle on Z_n
  for (int n : {12, 30, 36, 64}) {
    const auto g = build_zero_divisor_graph(make_zn(n));
    std::set<std::pair<std::string, std::string>> expected;
    std::set<std::string> verts;
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        if ((a * b) % n == 0) {
          verts.insert(std::to_string(a));
          if (a != b) {
            auto x = std::to_string(a), y = std::to_string(b);
            if (y < x) std::swap(x, y);
            expected.insert({x, y});
          }
        }
    CHECK(vertex_labels(g) == verts);
    CHECK(oracle::labelled_edges(g) == expected);
  }
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(complete_bipartite(1, 1).edge_count() == 1);
  CHECK(complete_bipartite(2, 3).label(0) == "a0");
  CHECK(complete_bipartite(2, 3).label(4) == "b2");
}

TEST_CASE("simple-graph invariants") {
  SimpleGraph g(4, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(2, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 9), Error);
  CHECK(g.components() == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3}});
  CHECK(g.without_edge(0, 1).edge_count() == 1);
  const auto u = g.disjoint_union(complete_graph(3));
  CHECK(u.vertex_count() == 7);
  CHECK(u.edge_count() == 5);
  CHECK(u.has_triangle());
  CHECK(!g.has_triangle());
  const auto h = u.induced({4, 5, 6});
  CHECK(h.edge_count() == 3);
}

TEST_CASE("complete bipartite subgraph search") {
  auto r = find_complete_bipartite_subgraph(complete_bipartite(3, 3), 2, 2);
  CHECK(r.outcome == SearchOutcome::found);
  REQUIRE(r.witness.has_value());
  for (auto a : r.witness->left)
    for (auto b : r.witness->right) CHECK(complete_bipartite(3, 3).has_edge(a, b));

  SimpleGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(find_complete_bipartite_subgraph(path, 2, 2).outcome == SearchOutcome::none);

  const auto z12 = ring("zn:12");
  const auto ag12 = build_ag(z12, all_ideals(z12));
  r = find_complete_bipartite_subgraph(ag12, 1, 2);
  REQUIRE(r.outcome == SearchOutcome::found);
  // centers of a K_{1,2} in the path (2)-(6)-(4)-(3) are (6) or (4)
  const auto center = ag12.label(r.witness->left.at(0));
  CHECK((center == "(6)" || center == "(4)"));

  SimpleGraph cycle(30, {});
  for (Vertex v = 0; v < 30; ++v) cycle.add_edge(std::min<Vertex>(v, (v + 1) % 30), std::max<Vertex>(v, (v + 1) % 30));
  CHECK(find_complete_bipartite_subgraph(cycle, 2, 2).outcome == SearchOutcome::none);
  CHECK(find_complete_bipartite_subgraph(cycle, 2, 2, 3).outcome == SearchOutcome::unknown);
}

TEST_CASE("biclique search agrees with brute force on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 5;
    SimpleGraph g(n, {});
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    for (std::size_t m = 1; m <= 2; ++m)
      for (std::size_t k = m; k <= 3; ++k) {
        // brute force over all disjoint (A, B) with |A| = m, |B| = k
        bool exists = false;
        for (std::uint32_t a = 0; a < (1u << n) && !exists; ++a) {
          if (static_cast<std::size_t>(std::popcount(a)) != m) continue;
          std::uint32_t common = (1u << n) - 1;
          for (Vertex u = 0; u < n; ++u)
            if (a >> u & 1u) {
              std::uint32_t nb = 0;
              for (Vertex w : g.neighbors(u)) nb |= 1u << w;
              common &= nb;
            }
          exists = static_cast<std::size_t>(std::popcount(common & ~a)) >= k;
        }
        const auto res = find_complete_bipartite_subgraph(g, m, k);
        CHECK((res.outcome == SearchOutcome::found) == exists);
      }
  }
}

TEST_CASE("DOT output is exact") {
  const auto z12 = ring("zn:12");
  const auto dot = to_dot(build_ag(z12, all_ideals(z12)));
  CHECK(dot ==
        "graph AG {\n"
        "  \"(6)\";\n"
        "  \"(4)\";\n"
        "  \"(3)\";\n"
        "  \"(2)\";\n"
        "  \"(6)\" -- \"(4)\";\n"
        "  \"(6)\" -- \"(2)\";\n"
        "  \"(4)\" -- \"(3)\";\n"
        "}\n");
}

TEST_CASE("graph JSON round trip") {
  const auto g = complete_bipartite(2, 3);
  const auto back = graph_from_json(graph_to_json(g));
  CHECK(back.labels() == g.labels());
  CHECK(back.edges() == g.edges());
  CHECK(back.name() == g.name());
  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"vertices", {"a"}}, {"edges", {{0, 0}}}}), Error);
}
