#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "annigraph/classify.hpp"
#include "annigraph/ring_spec.hpp"
#include "oracles.hpp"

using namespace annigraph;

namespace {

struct Classified {
  FiniteRing ring;
  IdealLattice lattice;
  RingClassification c;
};

Classified classified(const std::string& spec) {
  auto r = resolve_ring(parse_ring_spec(spec));
  auto lat = all_ideals(r);
  auto c = classify(r, lat);
  return {r, std::move(lat), std::move(c)};
}

std::string label(const Classified& x, const Ideal& i) { return x.lattice.label(*x.lattice.index_of(i)); }

// Local invariants recomputed from the oracle: maximal ideals, powers of m by
// repeated products, and the socle as an annihilator scan.
struct LocalOracle {
  std::vector<oracle::Subset> maximal;
  int t = 0;
  std::vector<int> profile;
  oracle::Subset socle;
};

LocalOracle local_oracle(const FiniteRing& r) {
  LocalOracle o;
  const auto ideals = oracle::ideals(r);
  for (const auto& i : ideals) {
    if (i.size() == r.size()) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (j.size() > i.size() && j.size() < r.size() && std::includes(j.begin(), j.end(), i.begin(), i.end()))
        maximal = false;
    if (maximal) o.maximal.push_back(i);
  }
  if (o.maximal.size() != 1) return o;
  const auto m = o.maximal[0];
  const double q = static_cast<double>(r.size()) / static_cast<double>(m.size());
  std::vector<oracle::Subset> powers = {m};
  while (powers.back().size() > 1) powers.push_back(oracle::product(r, powers.back(), m));
  o.t = static_cast<int>(powers.size()) - 1;
  if (m.size() == 1) o.t = 0;
  for (int k = 0; k < o.t; ++k) {
    const double ratio = static_cast<double>(powers[k].size()) / static_cast<double>(powers[k + 1].size());
    o.profile.push_back(static_cast<int>(std::lround(std::log(ratio) / std::log(q))));
  }
  o.socle = oracle::annihilator(r, m);
  return o;
}

}  // namespace


TEST_CASE("Z_8 is a SPIR with t = 2") {
  const auto x = classified("zn:8");
  const auto& c = x.c;
  CHECK(c.is_local);
  CHECK(label(x, *c.m) == "(2)");
  CHECK(c.t == 2);
  CHECK(c.residue_size == 2);
  CHECK(c.vdim_profile == std::vector<int>{1, 1});
  CHECK(c.is_gorenstein);
  CHECK(c.is_spir);
  CHECK(c.ideal_count == 4);
  CHECK(label(x, *c.socle) == "(4)");
}

TEST_CASE("Z_16 is a SPIR with t = 3 and five ideals") {
  const auto& c = classified("zn:16").c;
  CHECK(c.t == 3);
  CHECK(c.vdim_profile == std::vector<int>{1, 1, 1});
  CHECK(c.is_spir);
  CHECK(c.is_gorenstein);
  CHECK(c.ideal_count == 5);
}

TEST_CASE("F_2[x,y]/(x^2,y^2) is Gorenstein but not a SPIR") {
  const auto x = classified("cat:f2xy_x2y2");
  const auto& c = x.c;
  CHECK(c.is_local);
  CHECK(label(x, *c.m) == "(x,y)");
  CHECK(c.t == 2);
  CHECK(c.residue_size == 2);
  CHECK(c.vdim_profile == std::vector<int>{2, 1});
  CHECK(label(x, *c.socle) == "(xy)");
  CHECK(c.is_gorenstein);
  CHECK(!c.is_spir);
  CHECK(c.ideal_count == 7);
}

TEST_CASE("F_2[x,y]/(x^2,xy,y^2) is not Gorenstein") {
  const auto x = classified("cat:f2xy_x2xyy2");
  const auto& c = x.c;
  CHECK(c.t == 1);
  CHECK(c.vdim_profile == std::vector<int>{2});
  CHECK(*c.socle == *c.m);
  CHECK(c.socle_dim == 2);
  CHECK(!c.is_gorenstein);
  CHECK(!unique_minimal_ideal(x.lattice).has_value());
}

TEST_CASE("fields and non-local rings") {
  const auto f = classified("cat:f9").c;
  CHECK(f.is_field);
  CHECK(f.is_local);
  CHECK(f.t == 0);
  CHECK(f.m->is_zero());
  CHECK(f.is_gorenstein);
  CHECK(f.residue_size == 9);
  CHECK(!unique_minimal_ideal(classified("cat:f9").lattice).has_value());

  const auto z12 = classified("zn:12");
  CHECK(!z12.c.is_local);
  CHECK(z12.c.maximal_ideals.size() == 2);
  CHECK(!z12.c.m.has_value());
  CHECK(!unique_minimal_ideal(z12.lattice).has_value());
}

TEST_CASE("unique minimal ideal of Z_8 is m^2") {
  const auto x = classified("zn:8");
  const auto min = unique_minimal_ideal(x.lattice);
  REQUIRE(min.has_value());
  CHECK(*min == x.c.m_power(2));
}

TEST_CASE("vdim") {
  const auto x = classified("cat:f2xy_x2y2");
  CHECK(vdim(*x.c.m, x.c.m_power(2), *x.c.m, 2) == 2);
  CHECK(vdim(*x.c.m, *x.c.m, *x.c.m, 2) == 0);
  const auto z9 = classified("zn:9");
  CHECK(vdim(*z9.c.m, z9.c.m_power(2), *z9.c.m, 3) == 1);
  // m does not kill R/m^2's top piece: R/m^2 is not an R/m-space
  CHECK_THROWS_AS(vdim(Ideal::whole(x.ring), x.c.m_power(2), *x.c.m, 2), Error);
  // quotient of size 8/2 = 4 is not a power of 3
  CHECK_THROWS_AS(vdim(*x.c.m, x.c.m_power(2), *x.c.m, 3), Error);
}

TEST_CASE("classification agrees with the oracle over the corpus") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    const auto x = classified(e.spec);
    const auto o = local_oracle(x.ring);
    CHECK(x.c.maximal_ideals.size() == o.maximal.size());
    CHECK(x.c.is_local == (o.maximal.size() == 1));
    if (!x.c.is_local) continue;
    CHECK(x.c.m->members().members() == o.maximal[0]);
    CHECK(x.c.t == o.t);
    CHECK(x.c.vdim_profile == o.profile);
    CHECK(x.c.socle->members().members() == o.socle);
    CHECK(prime_power(x.c.residue_size).has_value());
    // the SPIR flag means every ideal is a power of m
    bool chain = true;
    for (const auto& i : x.lattice.ideals()) {
      bool is_power = false;
      for (int k = 0; k <= x.c.t + 1; ++k) is_power = is_power || i == x.c.m_power(k);
      chain = chain && is_power;
    }
    CHECK(x.c.is_spir == chain);
  }
}

TEST_CASE("prime powers") {
  CHECK(prime_power(8) == std::pair<long long, int>{2, 3});
  CHECK(prime_power(49) == std::pair<long long, int>{7, 2});
  CHECK(!prime_power(12).has_value());
  CHECK(!prime_power(1).has_value());
}

TEST_CASE("JSON and CSV output") {
  const auto x = classified("zn:8");
  const auto j = classification_to_json(x.c, x.lattice);
  CHECK(j.at("t") == 2);
  CHECK(j.at("is_spir") == true);
  CHECK(j.at("socle") == "(4)");
  const auto header = classification_csv_header();
  const auto row = classification_csv_row("z8", x.c);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
  CHECK(row.rfind("z8,", 0) == 0);
}
