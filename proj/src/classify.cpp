#include "annigraph/classify.hpp"

#include <sstream>

namespace annigraph {

std::optional<std::pair<long long, int>> prime_power(std::size_t q) {
  if (q < 2) return std::nullopt;
  long long p = 2;
  while (static_cast<std::size_t>(p * p) <= q && q % static_cast<std::size_t>(p) != 0) ++p;
  if (q % static_cast<std::size_t>(p) != 0) p = static_cast<long long>(q);
  int k = 0;
  while (q % static_cast<std::size_t>(p) == 0) {
    q /= static_cast<std::size_t>(p);
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, k);
}

int vdim(const Ideal& numerator, const Ideal& denominator, const Ideal& m, std::size_t q) {
  if (!denominator.subset_of(numerator)) throw Error("vdim: denominator is not contained in numerator");
  if (!ideal_product(m, numerator).subset_of(denominator))
    throw Error("vdim: quotient is not an R/m-vector space (m * numerator not in denominator)");
  if (q < 2) throw Error("vdim: residue field size must be at least 2");
  std::size_t ratio = numerator.size() / denominator.size();
  int d = 0;
  while (ratio > 1 && ratio % q == 0) {
    ratio /= q;
    ++d;
  }
  if (ratio != 1) throw Error("vdim: quotient size is not a power of the residue field size");
  return d;
}

std::optional<Ideal> unique_minimal_ideal(const IdealLattice& lattice) {
  std::optional<Ideal> found;
  for (std::size_t k = 1; k < lattice.whole_index(); ++k) {
    const Ideal& i = lattice[k];
    bool minimal = true;
    for (std::size_t s = 1; s < k && minimal; ++s)
      if (lattice[s].size() < i.size() && lattice[s].subset_of(i)) minimal = false;
    if (!minimal) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

RingClassification classify(const FiniteRing& r, const IdealLattice& lattice) {
  if (!lattice.ring().same_as(r)) throw Error("lattice belongs to a different ring");
  RingClassification c;
  c.fingerprint = r.fingerprint();
  c.ideal_count = lattice.size();

  const std::size_t whole = lattice.whole_index();
  for (std::size_t k = 0; k < whole; ++k) {
    bool maximal = true;
    for (std::size_t s = k + 1; s < whole && maximal; ++s)
      if (lattice[s].size() > lattice[k].size() && lattice[k].subset_of(lattice[s])) maximal = false;
    if (maximal) c.maximal_ideals.push_back(lattice[k]);
  }
  c.is_local = c.maximal_ideals.size() == 1;
  if (!c.is_local) return c;

  const Ideal& m = c.maximal_ideals.front();
  c.m = m;
  c.residue_size = r.size() / m.size();
  if (!prime_power(c.residue_size))
    throw Error("residue field size " + std::to_string(c.residue_size) + " is not a prime power");

  c.m_powers.push_back(Ideal::whole(r));
  if (m.is_zero()) {
    c.is_field = true;
    c.t = 0;
    c.m_powers.push_back(m);
    c.socle = Ideal::whole(r);
    c.socle_dim = 1;
    c.is_gorenstein = true;
    c.is_spir = true;
    return c;
  }

  Ideal power = m;
  while (!power.is_zero()) {
    c.m_powers.push_back(power);
    power = ideal_product(power, m);
    if (power == c.m_powers.back()) throw Error("maximal ideal is not nilpotent");
  }
  c.m_powers.push_back(power);
  c.t = static_cast<int>(c.m_powers.size()) - 2;
  for (int k = 1; k <= c.t; ++k)
    c.vdim_profile.push_back(vdim(c.m_power(k), c.m_power(k + 1), m, c.residue_size));

  c.socle = annihilator(m);
  c.socle_dim = vdim(*c.socle, Ideal::zero(r), m, c.residue_size);
  c.is_gorenstein = c.socle_dim == 1;

  c.is_spir = true;
  for (const Ideal& i : lattice.ideals()) {
    bool is_power = false;
    for (const Ideal& p : c.m_powers) is_power = is_power || p == i;
    if (!is_power) {
      c.is_spir = false;
      break;
    }
  }
  return c;
}

nlohmann::json classification_to_json(const RingClassification& c, const IdealLattice& lattice) {
  auto name = [&](const Ideal& i) {
    auto k = lattice.index_of(i);
    return k ? lattice.label(*k) : std::string("?");
  };
  nlohmann::json maximal = nlohmann::json::array();
  for (const Ideal& i : c.maximal_ideals) maximal.push_back(name(i));
  nlohmann::json j = {{"fingerprint", c.fingerprint},
                      {"ring_size", lattice.ring().size()},
                      {"ideal_count", c.ideal_count},
                      {"maximal_ideals", maximal},
                      {"is_local", c.is_local},
                      {"artinian", true}};
  if (c.is_local) {
    j["is_field"] = c.is_field;
    j["m"] = name(*c.m);
    j["t"] = c.t;
    j["residue_size"] = c.residue_size;
    j["vdim_profile"] = c.vdim_profile;
    j["socle"] = name(*c.socle);
    j["socle_dim"] = c.socle_dim;
    j["is_gorenstein"] = c.is_gorenstein;
    j["is_spir"] = c.is_spir;
  }
  return j;
}

std::string classification_csv_header() {
  return "name,fingerprint,size,ideal_count,maximal_ideals,local,field,t,q,vdim_profile,socle_dim,"
         "gorenstein,spir";
}

std::string classification_csv_row(const std::string& name, const RingClassification& c) {
  std::ostringstream os;
  std::size_t size = c.maximal_ideals.empty() ? 0 : c.maximal_ideals.front().ring().size();
  os << name << "," << c.fingerprint << "," << size << "," << c.ideal_count << ","
     << c.maximal_ideals.size() << "," << (c.is_local ? 1 : 0) << "," << (c.is_field ? 1 : 0) << ",";
  if (c.is_local) {
    os << c.t << "," << c.residue_size << ",";
    for (std::size_t k = 0; k < c.vdim_profile.size(); ++k) os << (k ? ";" : "") << c.vdim_profile[k];
    os << "," << c.socle_dim << "," << (c.is_gorenstein ? 1 : 0) << "," << (c.is_spir ? 1 : 0);
  } else {
    os << ",,,,,";
  }
  return os.str();
}

}  // namespace annigraph
