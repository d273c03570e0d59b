#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "annigraph/element_set.hpp"
#include "annigraph/error.hpp"

namespace annigraph {

inline constexpr std::size_t kDefaultMaxRingSize = 4096;
inline constexpr std::size_t kDefaultTripleCheckLimit = 512;

/// A finite commutative ring with identity, stored as explicit addition and
/// multiplication tables over element indices 0..size-1.
///
/// Element 0 is always the additive identity. Copies share the underlying
/// tables, so passing rings by value is cheap and instances are immutable.
class FiniteRing {
 public:
  /// Builds a ring from raw row-major tables. `zero` may be any index; the
  /// tables are relabelled so that it becomes index 0. Only the table shape
  /// and entry ranges are checked here; use validate_ring for the axioms.
  FiniteRing(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul,
             Elem zero, Elem one, std::vector<std::string> labels = {});

  std::size_t size() const { return data_->size; }
  Elem zero() const { return 0; }
  Elem one() const { return data_->one; }

  Elem add(Elem a, Elem b) const { return data_->add[a * data_->size + b]; }
  Elem mul(Elem a, Elem b) const { return data_->mul[a * data_->size + b]; }
  Elem neg(Elem a) const { return data_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  const std::string& label(Elem a) const { return data_->labels[a]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::vector<Elem>& add_table() const { return data_->add; }
  const std::vector<Elem>& mul_table() const { return data_->mul; }

  /// Hex digest of the tables; identifies a ring across serialized artifacts.
  const std::string& fingerprint() const { return data_->fingerprint; }

  /// True when both handles refer to identical tables.
  bool same_as(const FiniteRing& other) const {
    return data_ == other.data_ || data_->fingerprint == other.data_->fingerprint;
  }

  ElementSet empty_set() const { return ElementSet(size()); }

 private:
  struct Data {
    std::size_t size = 0;
    Elem one = 0;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::vector<std::string> labels;
    std::string fingerprint;
  };
  std::shared_ptr<const Data> data_;
};

enum class ValidationStatus { pass, fail, skipped };

struct ValidationReport {
  ValidationStatus status = ValidationStatus::pass;
  std::string axiom;          // name of the first failing axiom, if any
  std::vector<Elem> witness;  // offending element tuple
  std::string message;

  bool ok() const { return status == ValidationStatus::pass; }
};

struct ValidationOptions {
  // Rings larger than this are not put through the O(n^3) triple loops
  // unless the limit is raised.
  std::size_t triple_check_limit = kDefaultTripleCheckLimit;
};

/// Exhaustively checks the commutative-unital-ring axioms over the tables.
ValidationReport validate_ring(const FiniteRing& r, const ValidationOptions& opts = {});

FiniteRing make_zn(long long n, std::size_t max_size = kDefaultMaxRingSize);

/// Componentwise product; element (i, j) has index i * |b| + j.
FiniteRing make_product(const FiniteRing& a, const FiniteRing& b,
                        std::size_t max_size = kDefaultMaxRingSize);

/// Algebra over F_p with basis e_0 = 1, e_1, ..., e_{k-1}; `mult_table[i][j]`
/// holds the coefficients of e_i * e_j. Element index of the coefficient
/// vector (c_0, ..., c_{k-1}) is sum c_i p^i.
FiniteRing make_structure_constants(long long p, std::size_t rank,
                                    std::vector<std::string> basis_labels,
                                    const std::vector<std::vector<std::vector<long long>>>& mult_table,
                                    std::size_t max_size = kDefaultMaxRingSize);

/// Z_p[x]/(f) for a monic f given by coefficients from the constant term up.
FiniteRing make_poly_quotient(long long p, const std::vector<long long>& coeffs,
                              std::size_t max_size = kDefaultMaxRingSize);

/// Like make_poly_quotient but requires the result to be a field.
FiniteRing make_galois_field(long long p, const std::vector<long long>& coeffs,
                             std::size_t max_size = kDefaultMaxRingSize);

class Ideal;

/// R/I with cosets indexed in order of their least member.
FiniteRing quotient_ring(const FiniteRing& r, const Ideal& i);

/// Map from elements of `r` to coset indices of quotient_ring(r, i).
std::vector<Elem> quotient_map(const FiniteRing& r, const Ideal& i);

/// True when both rings have identical tables after applying `phi` (an
/// element bijection from a to b).
bool is_isomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& phi);

bool is_prime(long long n);

nlohmann::json ring_to_json(const FiniteRing& r);
FiniteRing ring_from_json(const nlohmann::json& j, std::size_t max_size = kDefaultMaxRingSize);
FiniteRing structure_constants_from_json(const nlohmann::json& j,
                                         std::size_t max_size = kDefaultMaxRingSize);

}  // namespace annigraph
