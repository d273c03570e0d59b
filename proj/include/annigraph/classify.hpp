#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "annigraph/ideal.hpp"

namespace annigraph {

/// Ring-theoretic invariants of a finite ring. The local-ring fields (m, t,
/// residue size, v.dim profile, socle) are only populated for local rings.
struct RingClassification {
  std::string fingerprint;
  std::vector<Ideal> maximal_ideals;
  std::size_t ideal_count = 0;
  bool is_local = false;
  bool is_field = false;

  std::optional<Ideal> m;
  int t = 0;                        // m^t != 0, m^(t+1) = 0; 0 for fields
  std::size_t residue_size = 0;     // q = |R/m|
  std::vector<int> vdim_profile;    // v.dim of m^k/m^(k+1), k = 1..t
  std::vector<Ideal> m_powers;      // m^0 = R, m^1, ..., m^(t+1) = 0
  std::optional<Ideal> socle;       // Ann(m)
  int socle_dim = 0;
  bool is_gorenstein = false;
  bool is_spir = false;

  /// m^k for 0 <= k; powers beyond t+1 are the zero ideal.
  const Ideal& m_power(int k) const {
    return m_powers[static_cast<std::size_t>(std::min<int>(k, static_cast<int>(m_powers.size()) - 1))];
  }
};

RingClassification classify(const FiniteRing& r, const IdealLattice& lattice);

/// d such that |numerator| / |denominator| = q^d, for an R/m-vector space
/// numerator/denominator. Throws when the preconditions fail.
int vdim(const Ideal& numerator, const Ideal& denominator, const Ideal& m, std::size_t q);

/// The only minimal nonzero ideal, when exactly one exists.
std::optional<Ideal> unique_minimal_ideal(const IdealLattice& lattice);

/// Returns (p, k) with q = p^k, or nullopt if q is not a prime power.
std::optional<std::pair<long long, int>> prime_power(std::size_t q);

nlohmann::json classification_to_json(const RingClassification& c, const IdealLattice& lattice);
std::string classification_csv_header();
std::string classification_csv_row(const std::string& name, const RingClassification& c);

}  // namespace annigraph
