#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "annigraph/element_set.hpp"
#include "annigraph/ring.hpp"

namespace annigraph {

inline constexpr std::size_t kDefaultLatticeCap = 100000;

/// An ideal of a finite ring, stored as a membership mask.
class Ideal {
 public:
  /// Checked construction: throws if `members` is not an ideal of `ring`.
  static Ideal from_members(const FiniteRing& ring, ElementSet members);
  static Ideal from_members(const FiniteRing& ring, const std::vector<Elem>& members);

  static Ideal zero(const FiniteRing& ring);
  static Ideal whole(const FiniteRing& ring);

  const FiniteRing& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return size_; }
  bool contains(Elem e) const { return members_.contains(e); }
  bool is_zero() const { return size_ == 1; }
  bool is_whole() const { return size_ == ring_.size(); }
  bool subset_of(const Ideal& other) const { return members_.subset_of(other.members_); }

  /// A minimal additive generating set (greedy, in element order).
  const std::vector<Elem>& additive_generators() const { return additive_gens_; }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }

  /// Order used for lattice storage: cardinality, then member lists.
  friend bool canonical_less(const Ideal& a, const Ideal& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return lex_less(a.members_, b.members_);
  }

 private:
  friend struct IdealAccess;
  Ideal(FiniteRing ring, ElementSet members);

  FiniteRing ring_;
  ElementSet members_;
  std::size_t size_ = 0;
  std::vector<Elem> additive_gens_;
};

bool canonical_less(const Ideal& a, const Ideal& b);

/// True when `s` contains zero and is closed under addition and under
/// multiplication by ring elements.
bool is_ideal(const FiniteRing& r, const ElementSet& s);

/// Additive subgroup generated by `gens`.
ElementSet additive_span(const FiniteRing& r, const std::vector<Elem>& gens);

Ideal principal_ideal(const FiniteRing& r, Elem x);
Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_power(const Ideal& i, int k);
Ideal annihilator(const Ideal& i);

/// All ideals of a ring, sorted by (cardinality, member list).
class IdealLattice {
 public:
  const FiniteRing& ring() const { return ring_; }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t k) const { return ideals_[k]; }

  std::optional<std::size_t> index_of(const Ideal& i) const;
  std::size_t zero_index() const { return 0; }
  std::size_t whole_index() const { return ideals_.size() - 1; }

  /// Least element generating the ideal as a principal ideal, if any.
  std::optional<Elem> principal_generator(std::size_t k) const { return principal_gen_[k]; }

  /// Display name: "(g)" for principal ideals, "(g,h)" for two generators,
  /// "I#k" otherwise. Generators are the lexicographically least choice.
  std::string label(std::size_t k) const;

 private:
  friend IdealLattice all_ideals(const FiniteRing&, std::size_t);
  explicit IdealLattice(FiniteRing r) : ring_(std::move(r)) {}

  FiniteRing ring_;
  std::vector<Ideal> ideals_;
  std::vector<std::optional<Elem>> principal_gen_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Enumerates every ideal by seeding with the principal ideals and closing
/// under sums with principal ideals. Throws once more than `cap` ideals exist.
IdealLattice all_ideals(const FiniteRing& r, std::size_t cap = kDefaultLatticeCap);

/// 𝕀(J): lattice members contained in `j`, in lattice order.
std::vector<Ideal> sub_ideals(const Ideal& j, const IdealLattice& lattice);

/// Nonzero ideals with a nonzero annihilator, in lattice order.
std::vector<Ideal> annihilating_ideals(const IdealLattice& lattice);

nlohmann::json ideal_to_json(const Ideal& i);
nlohmann::json lattice_to_json(const IdealLattice& lattice);

}  // namespace annigraph
