#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "annigraph/classify.hpp"
#include "annigraph/genus.hpp"
#include "annigraph/graph.hpp"
#include "annigraph/ring_spec.hpp"

namespace annigraph {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string check;
  std::string ring;         // corpus name; "*" for corpus-wide entries
  std::string fingerprint;
  CheckStatus status = CheckStatus::pass;
  std::string detail;       // what was checked, or why it was skipped
  nlohmann::json witness;   // set on failure

  static CheckResult passed(std::string check, std::string detail = {});
  static CheckResult failed(std::string check, std::string detail, nlohmann::json witness);
  static CheckResult skipped(std::string check, std::string reason);
};

std::string to_string(CheckStatus s);
nlohmann::json check_to_json(const CheckResult& c);

enum class ShapeKind { double_star, star_with_matching };

/// Role assignment for a recognised shape.
///
/// double_star: two centers; every other vertex is adjacent to at least one
/// center, and the edges among non-centers form a matching.
/// star_with_matching: one center adjacent to every other vertex, and the
/// remaining edges form a matching.
struct ShapeMatch {
  ShapeKind kind = ShapeKind::star_with_matching;
  std::vector<Vertex> centers;
  std::vector<Vertex> leaves;
  std::vector<Edge> matching;
};

std::string to_string(ShapeKind k);

std::optional<ShapeMatch> match_shape(const SimpleGraph& g, ShapeKind kind);
/// Match with the centers fixed in advance.
std::optional<ShapeMatch> match_shape_with_centers(const SimpleGraph& g, ShapeKind kind,
                                                   const std::vector<Vertex>& centers);

// Lattice checks. Each scans its whole applicability set inside one ring.
std::vector<CheckResult> check_subideal_count_lemma(const FiniteRing& r, const IdealLattice& lattice,
                                                    const RingClassification& c);
std::vector<CheckResult> check_socle_containment_lemma(const FiniteRing& r,
                                                       const IdealLattice& lattice,
                                                       const RingClassification& c);
CheckResult check_spir_chain_lemma(const FiniteRing& r, const IdealLattice& lattice,
                                   const RingClassification& c);
CheckResult check_unique_minimal_and_socle(const FiniteRing& r, const IdealLattice& lattice,
                                           const RingClassification& c);

enum class Suite { lemmas, shapes, genus, all };

Suite parse_suite(const std::string& s);
std::string to_string(Suite s);

struct SuiteOptions {
  Suite suite = Suite::all;
  GenusOptions genus;
  unsigned threads = 1;  // rings checked concurrently
};

struct RingTally {
  std::string ring;
  std::string fingerprint;
  int passed = 0, failed = 0, skipped = 0;
};

struct SuiteReport {
  std::vector<CheckResult> results;
  std::vector<RingTally> tallies;
  int passed = 0, failed = 0, skipped = 0;

  bool ok() const { return failed == 0; }
};

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts = {});

/// Checks that hold vacuously or need infinite rings, listed with the
/// hypothesis that fails for every finite ring.
std::vector<CheckResult> skipped_by_design();

std::string report_text(const SuiteReport& report);
nlohmann::json report_json(const SuiteReport& report);
std::string report_csv(const SuiteReport& report);

}  // namespace annigraph
