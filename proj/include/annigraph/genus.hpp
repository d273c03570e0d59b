#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "annigraph/graph.hpp"

namespace annigraph {

/// Cyclic order of neighbours around each vertex. Together with the graph it
/// determines an embedding in an orientable surface.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

enum class GenusStatus { exact, bounded, budget_exhausted };

struct GenusResult {
  int lower = 0;
  std::optional<int> upper;
  GenusStatus status = GenusStatus::exact;
  std::optional<RotationSystem> witness;  // achieves `upper`
  std::uint64_t nodes = 0;

  bool is_exact() const { return status == GenusStatus::exact; }
};

struct GenusOptions {
  std::uint64_t budget_nodes = 100'000'000;
  std::uint64_t budget_ms = 300'000;
  unsigned threads = 1;
  // Skip the search and report [euler bound, heuristic embedding].
  bool bounds_only = false;
  // Reductions applied before search. Both are genus-preserving; turning them
  // off searches the raw graph, which is only useful for cross-checking.
  bool split_components = true;
  bool reduce = true;
};

/// ceil((n-3)(n-4)/12), the genus of K_n.
int genus_formula_complete(long long n);
/// ceil((m-2)(n-2)/4), the genus of K_{m,n}.
int genus_formula_bipartite(long long m, long long n);

/// Euler-characteristic lower bound summed over connected components:
/// ceil((E - 3V + 6)/6), or ceil((E - 2V + 4)/4) for triangle-free components.
int euler_lower_bound(const SimpleGraph& g);

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> embedding;
};

/// Boyer-Myrvold planarity test with a planar rotation system on success.
PlanarityResult planarity(const SimpleGraph& g);
bool is_planar(const SimpleGraph& g);

/// Minimum orientable genus by iterative deepening over rotation systems.
GenusResult genus_exact(const SimpleGraph& g, const GenusOptions& opts = {});

/// Number of faces traced by the rotation system. Throws if `rs` does not
/// list exactly the neighbours of every vertex.
std::size_t count_faces(const SimpleGraph& g, const RotationSystem& rs);

/// Genus of the embedding given by `rs`: sum over non-trivial components of
/// (2 - V + E - F) / 2.
int verify_embedding(const SimpleGraph& g, const RotationSystem& rs);

std::string to_string(GenusStatus s);
nlohmann::json rotation_to_json(const RotationSystem& rs);
RotationSystem rotation_from_json(const nlohmann::json& j);
nlohmann::json genus_result_to_json(const GenusResult& r);
std::string genus_result_text(const GenusResult& r);

}  // namespace annigraph
