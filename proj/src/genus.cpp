#include "annigraph/genus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "rotation_search.hpp"

namespace annigraph {

namespace {

long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// Length of the shortest cycle, or 0 for a forest.
int girth(const std::vector<std::vector<int>>& nbr) {
  const int n = static_cast<int>(nbr.size());
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : nbr[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          const int cyc = dist[v] + dist[w] + 1;
          if (best == 0 || cyc < best) best = cyc;
        }
      }
    }
  }
  return best;
}

// A component reduced by deleting vertices of degree <= 1 and suppressing
// degree-2 vertices whose neighbours are distinct and non-adjacent. Lifting a
// rotation system of the reduced graph back through the recorded steps keeps
// the face count consistent, so the genus is unchanged.
struct Reduction {
  enum class Kind { remove, suppress };
  struct Step {
    Kind kind;
    Vertex v;
    long a;  // remove: neighbour or -1; suppress: first neighbour
    long b;  // suppress: second neighbour
  };

  std::vector<Step> steps;
  std::vector<Vertex> kept;               // surviving original vertices, ascending
  std::vector<std::vector<int>> nbr;      // reduced adjacency over kept indices
  std::size_t edges = 0;
};

Reduction reduce(const SimpleGraph& g, const std::vector<Vertex>& vertices, bool enabled) {
  std::map<Vertex, std::set<Vertex>> adj;
  for (Vertex v : vertices) adj[v] = std::set<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());

  Reduction red;
  bool changed = enabled;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end();) {
      const Vertex v = it->first;
      auto& nb = it->second;
      if (nb.size() <= 1) {
        long u = nb.empty() ? -1 : static_cast<long>(*nb.begin());
        if (u >= 0) adj[static_cast<Vertex>(u)].erase(v);
        red.steps.push_back({Reduction::Kind::remove, v, u, -1});
        it = adj.erase(it);
        changed = true;
        continue;
      }
      if (nb.size() == 2) {
        const Vertex a = *nb.begin(), b = *std::next(nb.begin());
        if (!adj[a].count(b)) {
          adj[a].erase(v);
          adj[b].erase(v);
          adj[a].insert(b);
          adj[b].insert(a);
          red.steps.push_back({Reduction::Kind::suppress, v, static_cast<long>(a), static_cast<long>(b)});
          it = adj.erase(it);
          changed = true;
          continue;
        }
      }
      ++it;
    }
  }

  std::map<Vertex, int> index;
  for (auto& [v, nb] : adj) {
    index[v] = static_cast<int>(red.kept.size());
    red.kept.push_back(v);
  }
  red.nbr.resize(red.kept.size());
  for (auto& [v, nb] : adj) {
    for (Vertex w : nb) red.nbr[index[v]].push_back(index[w]);
    std::sort(red.nbr[index[v]].begin(), red.nbr[index[v]].end());
    red.edges += nb.size();
  }
  red.edges /= 2;
  return red;
}

void lift(const Reduction& red, const std::vector<std::vector<int>>& reduced_rotation,
          std::vector<std::vector<Vertex>>& order) {
  for (std::size_t i = 0; i < red.kept.size(); ++i) {
    order[red.kept[i]].clear();
    for (int w : reduced_rotation[i]) order[red.kept[i]].push_back(red.kept[static_cast<std::size_t>(w)]);
  }
  auto replace = [&](Vertex at, Vertex from, Vertex to) {
    auto& o = order[at];
    *std::find(o.begin(), o.end(), from) = to;
  };
  for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
    if (it->kind == Reduction::Kind::suppress) {
      const auto a = static_cast<Vertex>(it->a), b = static_cast<Vertex>(it->b);
      replace(a, b, it->v);
      replace(b, a, it->v);
      order[it->v] = {a, b};
    } else if (it->a >= 0) {
      const auto u = static_cast<Vertex>(it->a);
      order[it->v] = {u};
      order[u].push_back(it->v);
    } else {
      order[it->v].clear();
    }
  }
}

// Faces needed for genus `g` on a graph whose non-trivial components number
// `c`, with V non-isolated vertices and E edges.
int faces_for(int g, long components, long v, long e) {
  return static_cast<int>(2 * components - 2 * g - v + e);
}

// Greedy local improvement of the sorted rotation: move one neighbour to a
// new position while that increases the face count.
std::vector<std::vector<int>> heuristic_rotation(const detail::RotationSearch& probe,
                                                 const std::vector<std::vector<int>>& nbr) {
  std::vector<std::vector<int>> rot = nbr;
  int faces = probe.faces_of(rot);
  const int darts = probe.dart_count();
  const int passes = darts <= 200 ? 20 : (darts <= 1000 ? 1 : 0);
  for (int pass = 0; pass < passes; ++pass) {
    bool improved = false;
    for (std::size_t v = 0; v < rot.size(); ++v) {
      const std::size_t d = rot[v].size();
      if (d < 3) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j) continue;
          auto trial = rot[v];
          const int w = trial[i];
          trial.erase(trial.begin() + static_cast<long>(i));
          trial.insert(trial.begin() + static_cast<long>(j), w);
          std::swap(rot[v], trial);
          const int f = probe.faces_of(rot);
          if (f > faces) {
            faces = f;
            improved = true;
          } else {
            std::swap(rot[v], trial);
          }
        }
    }
    if (!improved) break;
  }
  return rot;
}

struct SearchOutcome {
  detail::RotationSearch::Outcome outcome;
  std::vector<std::vector<int>> rotation;
};

SearchOutcome run_search(const std::vector<std::vector<int>>& nbr, int min_face, int target,
                         detail::SearchBudget& budget, unsigned threads) {
  using Outcome = detail::RotationSearch::Outcome;
  detail::RotationSearch root(nbr, min_face);
  if (threads <= 1) {
    Outcome o = root.search(target, budget);
    return {o, o == Outcome::found ? root.rotation() : std::vector<std::vector<int>>{}};
  }

  // Fan out over a prefix of the search tree. Tasks keep search order, and
  // the lowest-indexed success wins, so the witness does not depend on
  // scheduling.
  std::vector<std::vector<detail::RotationSearch::Choice>> tasks;
  for (int depth = 1; depth <= 4; ++depth) {
    detail::RotationSearch probe(nbr, min_face);
    tasks = probe.frontier(target, depth);
    if (tasks.size() >= 4 * threads) break;
  }
  if (tasks.empty()) return {Outcome::refuted, {}};

  std::atomic<long> best{static_cast<long>(tasks.size())};
  std::atomic<std::size_t> next{0};
  std::vector<Outcome> outcomes(tasks.size(), Outcome::cancelled);
  std::vector<std::vector<std::vector<int>>> rotations(tasks.size());
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      if (static_cast<long>(k) > best.load()) continue;
      detail::RotationSearch s(nbr, min_face);
      s.apply(tasks[k]);
      outcomes[k] = s.search(target, budget, &best, static_cast<long>(k));
      if (outcomes[k] == Outcome::found) {
        rotations[k] = s.rotation();
        long cur = best.load();
        while (static_cast<long>(k) < cur && !best.compare_exchange_weak(cur, static_cast<long>(k))) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (outcomes[k] == Outcome::found) return {Outcome::found, rotations[k]};
    if (outcomes[k] != Outcome::refuted) return {Outcome::exhausted, {}};
  }
  return {Outcome::refuted, {}};
}

struct PartResult {
  int lower = 0;
  int upper = 0;
  bool exact = true;
  std::vector<std::vector<int>> rotation;  // over reduced indices
};

// Genus of the graph on `nbr` (non-trivial components counted by `components`).
PartResult solve(const std::vector<std::vector<int>>& nbr, long components, long lower_bound,
                 const GenusOptions& opts, detail::SearchBudget& budget) {
  PartResult res;
  long v = 0, e2 = 0;
  bool has_leaf = false;
  for (const auto& nb : nbr) {
    if (nb.empty()) continue;
    ++v;
    e2 += static_cast<long>(nb.size());
    has_leaf = has_leaf || nb.size() == 1;
  }
  const long e = e2 / 2;
  if (e == 0) return res;

  int min_face = girth(nbr);
  if (min_face == 0 || has_leaf) min_face = 2;

  detail::RotationSearch probe(nbr, min_face);
  res.rotation = heuristic_rotation(probe, nbr);
  const int heuristic_faces = probe.faces_of(res.rotation);
  res.upper = static_cast<int>((2 * components - v + e - heuristic_faces) / 2);
  res.lower = static_cast<int>(std::max(0L, lower_bound));
  if (opts.bounds_only) {
    res.exact = res.lower == res.upper;
    return res;
  }

  for (int g = res.lower; g < res.upper; ++g) {
    SearchOutcome out = run_search(nbr, min_face, faces_for(g, components, v, e), budget, opts.threads);
    if (out.outcome == detail::RotationSearch::Outcome::found) {
      res.upper = g;
      res.rotation = std::move(out.rotation);
      break;
    }
    if (out.outcome != detail::RotationSearch::Outcome::refuted) {
      res.exact = false;
      return res;
    }
    res.lower = g + 1;
  }
  res.lower = res.upper;
  return res;
}

}  // namespace

int genus_formula_complete(long long n) {
  if (n < 3) throw Error("genus formula for K_n requires n >= 3");
  return static_cast<int>(ceil_div((n - 3) * (n - 4), 12));
}

int genus_formula_bipartite(long long m, long long n) {
  if (m < 2 || n < 2) throw Error("genus formula for K_{m,n} requires m, n >= 2");
  return static_cast<int>(ceil_div((m - 2) * (n - 2), 4));
}

int euler_lower_bound(const SimpleGraph& g) {
  long long total = 0;
  for (const auto& comp : g.components()) {
    const SimpleGraph h = g.induced(comp);
    const auto v = static_cast<long long>(h.vertex_count());
    const auto e = static_cast<long long>(h.edge_count());
    if (v < 3 || e < 3) continue;
    const long long b = h.has_triangle() ? ceil_div(e - 3 * v + 6, 6) : ceil_div(e - 2 * v + 4, 4);
    total += std::max(0LL, b);
  }
  return static_cast<int>(total);
}

PlanarityResult planarity(const SimpleGraph& g) {
  using namespace boost;
  using BGraph = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>,
                                property<edge_index_t, int>>;
  BGraph bg(g.vertex_count());
  for (auto [u, v] : g.edges()) add_edge(u, v, bg);
  auto edge_ids = get(boost::edge_index, bg);
  graph_traits<BGraph>::edges_size_type count = 0;
  graph_traits<BGraph>::edge_iterator ei, ei_end;
  for (tie(ei, ei_end) = boost::edges(bg); ei != ei_end; ++ei) put(edge_ids, *ei, count++);

  using EmbeddingStorage = std::vector<std::vector<graph_traits<BGraph>::edge_descriptor>>;
  EmbeddingStorage storage(num_vertices(bg));
  auto embedding = make_iterator_property_map(storage.begin(), get(vertex_index, bg));
  PlanarityResult out;
  out.planar = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                            boyer_myrvold_params::embedding = embedding);
  if (out.planar) {
    RotationSystem rs;
    rs.order.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      for (const auto& ed : storage[v]) {
        const auto s = static_cast<Vertex>(source(ed, bg)), t = static_cast<Vertex>(target(ed, bg));
        rs.order[v].push_back(s == v ? t : s);
      }
    out.embedding = std::move(rs);
  }
  return out;
}

bool is_planar(const SimpleGraph& g) { return planarity(g).planar; }

GenusResult genus_exact(const SimpleGraph& g, const GenusOptions& opts) {
  detail::SearchBudget budget;
  budget.node_limit = opts.budget_nodes;
  budget.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.budget_ms);

  std::vector<std::vector<Vertex>> parts;
  if (opts.split_components) {
    parts = g.components();
  } else {
    parts.emplace_back(g.vertex_count());
    std::iota(parts.back().begin(), parts.back().end(), Vertex{0});
  }

  GenusResult out;
  RotationSystem witness;
  witness.order.resize(g.vertex_count());
  bool exact = true;
  int lower = 0, upper = 0;
  for (const auto& part : parts) {
    const SimpleGraph h = g.induced(part);
    long components = 0;
    for (const auto& c : h.components())
      if (c.size() > 1) ++components;
    const long lb = euler_lower_bound(h);

    // Reduce each component separately, then search on their union.
    std::vector<std::vector<int>> nbr;
    std::vector<Reduction> reductions;
    std::vector<std::size_t> offsets;
    for (const auto& comp : h.components()) {
      std::vector<Vertex> verts(comp.begin(), comp.end());
      reductions.push_back(reduce(h, verts, opts.reduce));
      offsets.push_back(nbr.size());
      for (const auto& nb : reductions.back().nbr) {
        nbr.emplace_back();
        for (int w : nb) nbr.back().push_back(w + static_cast<int>(offsets.back()));
      }
    }
    long reduced_components = 0;
    for (const auto& r : reductions)
      if (r.edges > 0) ++reduced_components;

    PartResult pr = solve(nbr, reduced_components, lb, opts, budget);
    lower += pr.lower;
    upper += pr.upper;
    exact = exact && pr.exact;

    std::vector<std::vector<Vertex>> local(h.vertex_count());
    for (std::size_t k = 0; k < reductions.size(); ++k) {
      std::vector<std::vector<int>> rot;
      for (std::size_t i = 0; i < reductions[k].kept.size(); ++i) {
        rot.emplace_back();
        if (!pr.rotation.empty())
          for (int w : pr.rotation[offsets[k] + i]) rot.back().push_back(w - static_cast<int>(offsets[k]));
      }
      lift(reductions[k], rot, local);
    }
    for (std::size_t i = 0; i < part.size(); ++i)
      for (Vertex w : local[i]) witness.order[part[i]].push_back(part[w]);
  }

  out.lower = lower;
  out.upper = upper;
  out.witness = std::move(witness);
  out.nodes = budget.nodes.load();
  if (exact)
    out.status = GenusStatus::exact;
  else
    out.status = opts.bounds_only ? GenusStatus::bounded : GenusStatus::budget_exhausted;
  return out;
}

std::size_t count_faces(const SimpleGraph& g, const RotationSystem& rs) {
  const std::size_t n = g.vertex_count();
  if (rs.order.size() != n) throw Error("rotation system has the wrong number of vertices");
  // next[(v, k)]: position in v's rotation of the successor of its k-th entry.
  std::vector<std::map<Vertex, std::size_t>> pos(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rs.order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw Error("rotation at vertex " + std::to_string(v) + " does not match its neighbours");
    for (std::size_t k = 0; k < rs.order[v].size(); ++k) pos[v][rs.order[v][k]] = k;
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t faces = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) {
      if (seen.count({u, v})) continue;
      ++faces;
      Vertex a = u, b = v;
      while (seen.insert({a, b}).second) {
        const auto& ob = rs.order[b];
        const Vertex c = ob[(pos[b][a] + 1) % ob.size()];
        a = b;
        b = c;
      }
    }
  return faces;
}

int verify_embedding(const SimpleGraph& g, const RotationSystem& rs) {
  const auto faces = static_cast<long>(count_faces(g, rs));
  long components = 0, v = 0;
  for (const auto& c : g.components())
    if (c.size() > 1) {
      ++components;
      v += static_cast<long>(c.size());
    }
  const long twice = 2 * components - v + static_cast<long>(g.edge_count()) - faces;
  if (twice < 0 || twice % 2 != 0)
    throw Error("inconsistent embedding: Euler characteristic gives non-integral genus");
  return static_cast<int>(twice / 2);
}

std::string to_string(GenusStatus s) {
  switch (s) {
    case GenusStatus::exact: return "exact";
    case GenusStatus::bounded: return "bounded";
    case GenusStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

nlohmann::json rotation_to_json(const RotationSystem& rs) { return rs.order; }

RotationSystem rotation_from_json(const nlohmann::json& j) {
  try {
    return RotationSystem{j.get<std::vector<std::vector<Vertex>>>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed rotation system: ") + e.what());
  }
}

nlohmann::json genus_result_to_json(const GenusResult& r) {
  nlohmann::json j = {{"status", to_string(r.status)}, {"lower", r.lower}, {"nodes", r.nodes}};
  j["upper"] = r.upper ? nlohmann::json(*r.upper) : nlohmann::json(nullptr);
  if (r.witness) j["witness"] = rotation_to_json(*r.witness);
  return j;
}

std::string genus_result_text(const GenusResult& r) {
  std::ostringstream os;
  if (r.is_exact()) {
    os << "exact " << r.lower;
  } else {
    os << to_string(r.status) << " [" << r.lower << ", ";
    if (r.upper)
      os << *r.upper;
    else
      os << "unknown";
    os << "]";
  }
  return os.str();
}

}  // namespace annigraph
