#include "annigraph/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace annigraph {

struct IdealAccess {
  static Ideal make(const FiniteRing& r, ElementSet s) { return Ideal(r, std::move(s)); }
};

namespace {

Ideal unchecked(const FiniteRing& r, ElementSet s) { return IdealAccess::make(r, std::move(s)); }

void require_same_ring(const Ideal& i, const Ideal& j) {
  if (!i.ring().same_as(j.ring())) throw Error("ideal arithmetic across different rings");
}

// Smallest subgroup containing `base` (already a subgroup) and `g`.
void adjoin(const FiniteRing& r, ElementSet& base, Elem g) {
  if (base.contains(g)) return;
  const std::vector<Elem> old = base.members();
  Elem step = g;
  while (!base.contains(step)) {
    for (Elem b : old) base.insert(r.add(b, step));
    step = r.add(step, g);
  }
}

}  // namespace

Ideal::Ideal(FiniteRing ring, ElementSet members)
    : ring_(std::move(ring)), members_(std::move(members)), size_(members_.count()) {
  ElementSet span = ring_.empty_set();
  span.insert(0);
  members_.for_each([&](Elem e) {
    if (span.contains(e)) return;
    additive_gens_.push_back(e);
    adjoin(ring_, span, e);
  });
}

Ideal Ideal::from_members(const FiniteRing& ring, ElementSet members) {
  if (members.universe() != ring.size()) throw Error("member mask does not match ring size");
  if (!is_ideal(ring, members)) throw Error("member set is not an ideal");
  return Ideal(ring, std::move(members));
}

Ideal Ideal::from_members(const FiniteRing& ring, const std::vector<Elem>& members) {
  ElementSet s = ring.empty_set();
  for (Elem e : members) {
    if (e >= ring.size()) throw Error("ideal member out of range", {e});
    s.insert(e);
  }
  return from_members(ring, std::move(s));
}

Ideal Ideal::zero(const FiniteRing& ring) {
  ElementSet s = ring.empty_set();
  s.insert(0);
  return Ideal(ring, std::move(s));
}

Ideal Ideal::whole(const FiniteRing& ring) {
  ElementSet s = ring.empty_set();
  for (Elem e = 0; e < ring.size(); ++e) s.insert(e);
  return Ideal(ring, std::move(s));
}

bool is_ideal(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.size() || !s.contains(0)) return false;
  const std::vector<Elem> m = s.members();
  for (Elem a : m)
    for (Elem b : m)
      if (!s.contains(r.add(a, b))) return false;
  for (Elem a : m)
    for (Elem x = 0; x < r.size(); ++x)
      if (!s.contains(r.mul(x, a))) return false;
  return true;
}

ElementSet additive_span(const FiniteRing& r, const std::vector<Elem>& gens) {
  ElementSet s = r.empty_set();
  s.insert(0);
  for (Elem g : gens) adjoin(r, s, g);
  return s;
}

Ideal principal_ideal(const FiniteRing& r, Elem x) {
  if (x >= r.size()) throw Error("element index out of range", {x});
  ElementSet s = r.empty_set();
  for (Elem a = 0; a < r.size(); ++a) s.insert(r.mul(a, x));
  return unchecked(r, std::move(s));
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const FiniteRing& r = i.ring();
  ElementSet s = i.members();
  const std::vector<Elem> base = i.members().members();
  j.members().for_each([&](Elem b) {
    if (s.contains(b)) return;
    for (Elem a : base) s.insert(r.add(a, b));
  });
  return unchecked(r, std::move(s));
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  return unchecked(i.ring(), i.members() & j.members());
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const FiniteRing& r = i.ring();
  // Every a in I is an integer combination of I's additive generators, so
  // the products g*b with b in J span IJ additively.
  std::vector<Elem> prods;
  for (Elem g : i.additive_generators())
    j.members().for_each([&](Elem b) { prods.push_back(r.mul(g, b)); });
  return unchecked(r, additive_span(r, prods));
}

Ideal ideal_power(const Ideal& i, int k) {
  if (k < 1) throw Error("ideal power exponent must be >= 1");
  Ideal out = i;
  for (int e = 1; e < k; ++e) out = ideal_product(out, i);
  return out;
}

Ideal annihilator(const Ideal& i) {
  const FiniteRing& r = i.ring();
  const auto& gens = i.additive_generators();
  ElementSet s = r.empty_set();
  for (Elem a = 0; a < r.size(); ++a) {
    bool kills = true;
    for (Elem g : gens)
      if (r.mul(a, g) != 0) {
        kills = false;
        break;
      }
    if (kills) s.insert(a);
  }
  return unchecked(r, std::move(s));
}

IdealLattice all_ideals(const FiniteRing& r, std::size_t cap) {
  IdealLattice lat(r);
  const std::size_t n = r.size();

  std::unordered_map<ElementSet, Elem, ElementSetHash> principal;  // mask -> least generator
  std::vector<Ideal> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 0; x < n; ++x) {
    Ideal p = principal_ideal(r, x);
    if (principal.emplace(p.members(), x).second) {
      seen.insert(p.members());
      found.push_back(std::move(p));
    }
  }
  const std::vector<Ideal> principals = found;

  // Closing under "+ principal ideal" reaches every finite sum of principal
  // ideals, i.e. every ideal.
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const Ideal& p : principals) {
      if (p.subset_of(found[k])) continue;
      Ideal s = ideal_sum(found[k], p);
      if (seen.insert(s.members()).second) {
        found.push_back(std::move(s));
        if (found.size() > cap)
          throw Error("ideal lattice exceeds the cap of " + std::to_string(cap) + " ideals");
      }
    }
  }

  std::sort(found.begin(), found.end(), canonical_less);
  lat.ideals_ = std::move(found);
  lat.principal_gen_.resize(lat.ideals_.size());
  for (std::size_t k = 0; k < lat.ideals_.size(); ++k) {
    lat.index_.emplace(lat.ideals_[k].members(), k);
    if (auto it = principal.find(lat.ideals_[k].members()); it != principal.end())
      lat.principal_gen_[k] = it->second;
  }
  return lat;
}

std::optional<std::size_t> IdealLattice::index_of(const Ideal& i) const {
  if (!i.ring().same_as(ring_)) return std::nullopt;
  if (auto it = index_.find(i.members()); it != index_.end()) return it->second;
  return std::nullopt;
}

std::string IdealLattice::label(std::size_t k) const {
  std::string out;
  if (principal_gen_[k]) {
    out = "(" + ring_.label(*principal_gen_[k]) + ")";
  } else {
    // Least sorted pair of generators among pairs of principal sub-ideals.
    std::optional<std::pair<Elem, Elem>> best;
    const Ideal& target = ideals_[k];
    std::vector<std::size_t> subs;
    for (std::size_t s = 0; s < k; ++s)
      if (principal_gen_[s] && ideals_[s].subset_of(target)) subs.push_back(s);
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = a + 1; b < subs.size(); ++b) {
        Elem ga = *principal_gen_[subs[a]], gb = *principal_gen_[subs[b]];
        std::pair<Elem, Elem> cand{std::min(ga, gb), std::max(ga, gb)};
        if (best && !(cand < *best)) continue;
        if (ideal_sum(ideals_[subs[a]], ideals_[subs[b]]) == target) best = cand;
      }
    if (best)
      out = "(" + ring_.label(best->first) + "," + ring_.label(best->second) + ")";
    else
      out = "I#" + std::to_string(k);
  }
  return out;
}

std::vector<Ideal> sub_ideals(const Ideal& j, const IdealLattice& lattice) {
  if (!j.ring().same_as(lattice.ring())) throw Error("ideal and lattice belong to different rings");
  std::vector<Ideal> out;
  for (const Ideal& i : lattice.ideals())
    if (i.subset_of(j)) out.push_back(i);
  return out;
}

std::vector<Ideal> annihilating_ideals(const IdealLattice& lattice) {
  std::vector<Ideal> out;
  for (const Ideal& i : lattice.ideals())
    if (!i.is_zero() && !annihilator(i).is_zero()) out.push_back(i);
  return out;
}

nlohmann::json ideal_to_json(const Ideal& i) { return i.members().members(); }

nlohmann::json lattice_to_json(const IdealLattice& lattice) {
  nlohmann::json ideals = nlohmann::json::array();
  for (std::size_t k = 0; k < lattice.size(); ++k)
    ideals.push_back({{"label", lattice.label(k)}, {"members", ideal_to_json(lattice[k])}});
  return {{"fingerprint", lattice.ring().fingerprint()}, {"ideals", std::move(ideals)}};
}

}  // namespace annigraph
