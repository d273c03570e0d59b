#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "annigraph/graph.hpp"
#include "annigraph/ring.hpp"

namespace annigraph {

/// Parsed form of a ring spec string:
///
///   zn:<n> | gf:<p>:[c0,c1,...] | polyq:<p>:[c0,c1,...] | prod:(<spec>,<spec>)
///   | sc:<path> | table:<path> | cat:<name>
///
/// Coefficient lists run from the constant term up, so gf:2:[1,1,1] is
/// F_2[x]/(x^2+x+1). Catalog names also cover reference graphs (k<n>,
/// km:<m>:<n>, petersen).
struct RingSpec {
  enum class Kind { zn, gf, polyq, product, sc, table, catalog };

  Kind kind = Kind::zn;
  long long n = 0;                  // zn modulus, or the prime for gf/polyq
  std::vector<long long> coeffs;    // gf/polyq
  std::string text;                 // path or catalog name
  std::vector<RingSpec> factors;    // product

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Throws Error("... at position k ...") on malformed input.
RingSpec parse_ring_spec(std::string_view s);

/// Canonical spelling; parse_ring_spec(to_string(x)) == x.
std::string to_string(const RingSpec& spec);

/// Ring names in the catalog, sorted.
std::vector<std::string> catalog_ring_names();

using SpecObject = std::variant<FiniteRing, SimpleGraph>;

/// Builds the ring (or catalog graph) a spec describes.
SpecObject resolve(const RingSpec& spec, std::size_t max_size = kDefaultMaxRingSize);
/// Like resolve, but a graph is an error.
FiniteRing resolve_ring(const RingSpec& spec, std::size_t max_size = kDefaultMaxRingSize);

struct CorpusEntry {
  std::string name;  // file-name safe
  std::string spec;
};

/// The fixed verification corpus, in report order.
std::vector<CorpusEntry> builtin_corpus();

}  // namespace annigraph
