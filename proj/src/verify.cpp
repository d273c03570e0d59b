#include "annigraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

namespace annigraph {

CheckResult CheckResult::passed(std::string check, std::string detail) {
  CheckResult c;
  c.check = std::move(check);
  c.status = CheckStatus::pass;
  c.detail = std::move(detail);
  return c;
}

CheckResult CheckResult::failed(std::string check, std::string detail, nlohmann::json witness) {
  CheckResult c;
  c.check = std::move(check);
  c.status = CheckStatus::fail;
  c.detail = std::move(detail);
  c.witness = std::move(witness);
  return c;
}

CheckResult CheckResult::skipped(std::string check, std::string reason) {
  CheckResult c;
  c.check = std::move(check);
  c.status = CheckStatus::skipped;
  c.detail = std::move(reason);
  return c;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

nlohmann::json check_to_json(const CheckResult& c) {
  nlohmann::json j = {{"check", c.check},   {"ring", c.ring},     {"fingerprint", c.fingerprint},
                      {"status", to_string(c.status)}, {"detail", c.detail}};
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

std::string to_string(ShapeKind k) {
  return k == ShapeKind::double_star ? "double_star" : "star_with_matching";
}

namespace {

bool is_center(const std::vector<Vertex>& centers, Vertex v) {
  return std::find(centers.begin(), centers.end(), v) != centers.end();
}

std::size_t count_sub_ideals(const Ideal& j, const IdealLattice& lattice) {
  std::size_t n = 0;
  for (const auto& i : lattice.ideals())
    if (i.subset_of(j)) ++n;
  return n;
}

std::string label_of(const Ideal& i, const IdealLattice& lattice) {
  return lattice.label(*lattice.index_of(i));
}

std::vector<std::string> labels_of(const std::vector<Ideal>& ideals, const IdealLattice& lattice) {
  std::vector<std::string> out;
  for (const auto& i : ideals) out.push_back(label_of(i, lattice));
  return out;
}

}  // namespace

std::optional<ShapeMatch> match_shape_with_centers(const SimpleGraph& g, ShapeKind kind,
                                                   const std::vector<Vertex>& centers) {
  const std::size_t want = kind == ShapeKind::double_star ? 2 : 1;
  if (centers.size() != want) return std::nullopt;
  for (Vertex c : centers)
    if (c >= g.vertex_count()) return std::nullopt;
  if (want == 2 && centers[0] == centers[1]) return std::nullopt;

  ShapeMatch m;
  m.kind = kind;
  m.centers = centers;
  std::sort(m.centers.begin(), m.centers.end());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (is_center(centers, v)) continue;
    std::size_t hub = 0, other = 0;
    for (Vertex w : g.neighbors(v)) {
      if (is_center(centers, w))
        ++hub;
      else
        ++other;
    }
    // star: adjacent to the center; double star: to at least one center.
    if (hub == 0 || (kind == ShapeKind::star_with_matching && hub != 1)) return std::nullopt;
    if (other > 1) return std::nullopt;
    m.leaves.push_back(v);
  }
  for (auto [u, v] : g.edges())
    if (!is_center(centers, u) && !is_center(centers, v)) m.matching.emplace_back(u, v);
  return m;
}

std::optional<ShapeMatch> match_shape(const SimpleGraph& g, ShapeKind kind) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  if (kind == ShapeKind::star_with_matching) {
    for (Vertex c : order) {
      if (g.degree(c) + 1 < n) break;
      if (auto m = match_shape_with_centers(g, kind, {c})) return m;
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vertex a = order[i], b = order[j];
      if (g.degree(a) + g.degree(b) + 2 < n) break;
      if (auto m = match_shape_with_centers(g, kind, {a, b})) return m;
    }
  return std::nullopt;
}

std::vector<CheckResult> check_subideal_count_lemma(const FiniteRing&, const IdealLattice& lattice,
                                                    const RingClassification& c) {
  const std::string name = "subideal_count";
  if (!c.is_local) return {CheckResult::skipped(name, "ring is not local")};
  if (c.is_field) return {CheckResult::skipped(name, "field: no nonzero proper principal ideals")};

  std::vector<CheckResult> out;
  for (int n = 1; n <= c.t + 1; ++n) {
    const Ideal& upper = c.m_power(n - 1);
    const Ideal& lower = c.m_power(n);
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      const Ideal& i = lattice[k];
      if (i.is_zero() || !lattice.principal_generator(k) || !i.subset_of(upper) || i.subset_of(lower))
        continue;
      const std::size_t lhs = count_sub_ideals(i, lattice);
      const std::size_t rhs = count_sub_ideals(ideal_intersection(i, lower), lattice) + 1;
      std::ostringstream os;
      os << "n=" << n << " I=" << lattice.label(k) << ": |I(I)|=" << lhs
         << ", |I(I cap m^" << n << ")|+1=" << rhs;
      if (lhs == rhs)
        out.push_back(CheckResult::passed(name, os.str()));
      else
        out.push_back(CheckResult::failed(
            name, os.str(), {{"n", n}, {"ideal", lattice.label(k)}, {"lhs", lhs}, {"rhs", rhs}}));
    }
  }
  if (out.empty()) out.push_back(CheckResult::passed(name, "vacuous: no applicable ideals"));
  return out;
}

std::vector<CheckResult> check_socle_containment_lemma(const FiniteRing&,
                                                       const IdealLattice& lattice,
                                                       const RingClassification& c) {
  const std::string name = "socle_containment";
  if (!c.is_local) return {CheckResult::skipped(name, "ring is not local")};
  if (c.is_field) return {CheckResult::skipped(name, "field: no proper nonzero ideals")};
  if (!c.is_gorenstein)
    return {CheckResult::skipped(name, "not Gorenstein: socle dimension " + std::to_string(c.socle_dim))};

  const Ideal& m2 = c.m_power(2);
  std::vector<CheckResult> out;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (!lattice.principal_generator(k)) continue;
    const Ideal& i = lattice[k];
    if (count_sub_ideals(i, lattice) != 3) continue;
    const Ideal prod = ideal_product(m2, i);
    const std::string detail = "I=" + lattice.label(k) + ": m^2 * I = " + label_of(prod, lattice);
    if (prod.is_zero())
      out.push_back(CheckResult::passed(name, detail));
    else
      out.push_back(CheckResult::failed(name, detail,
                                        {{"ideal", lattice.label(k)}, {"product", label_of(prod, lattice)}}));
  }
  if (out.empty()) out.push_back(CheckResult::passed(name, "vacuous: no principal ideal with |I(I)| = 3"));
  return out;
}

CheckResult check_spir_chain_lemma(const FiniteRing&, const IdealLattice& lattice,
                                   const RingClassification& c) {
  const std::string name = "spir_chain";
  if (!c.is_local) return CheckResult::skipped(name, "ring is not local");
  if (c.is_field) return CheckResult::skipped(name, "field: m = (0)");

  std::vector<std::string> checked;
  for (int n = 1; n <= c.t; ++n) {
    if (c.vdim_profile[static_cast<std::size_t>(n - 1)] != 1) continue;
    std::vector<Ideal> expected;
    for (int i = n; i <= c.t; ++i) expected.push_back(c.m_power(i));
    std::vector<Ideal> actual;
    for (const auto& i : sub_ideals(c.m_power(n), lattice))
      if (!i.is_zero()) actual.push_back(i);
    auto by_size = [](const Ideal& a, const Ideal& b) { return canonical_less(a, b); };
    std::sort(expected.begin(), expected.end(), by_size);
    std::sort(actual.begin(), actual.end(), by_size);
    if (actual != expected)
      return CheckResult::failed(name, "n=" + std::to_string(n) + ": I(m^n) is not the chain of powers",
                                 {{"n", n},
                                  {"ideals", labels_of(actual, lattice)},
                                  {"powers", labels_of(expected, lattice)}});
    if (n == 1 && !c.is_spir)
      return CheckResult::failed(name, "v.dim m/m^2 = 1 but ring is not a SPIR", {{"n", 1}});
    checked.push_back(std::to_string(n));
  }
  if (checked.empty()) return CheckResult::passed(name, "vacuous: no n with v.dim m^n/m^(n+1) = 1");
  std::string ns;
  for (const auto& s : checked) ns += (ns.empty() ? "" : ",") + s;
  return CheckResult::passed(name, "chain of powers below m^n for n in {" + ns + "}");
}

CheckResult check_unique_minimal_and_socle(const FiniteRing&, const IdealLattice& lattice,
                                           const RingClassification& c) {
  const std::string name = "unique_minimal_socle";
  if (!c.is_local) return CheckResult::skipped(name, "ring is not local");
  if (c.is_field) return CheckResult::skipped(name, "field");
  if (!c.is_gorenstein)
    return CheckResult::skipped(name, "not Gorenstein: socle dimension " + std::to_string(c.socle_dim));

  const Ideal& mt = c.m_power(c.t);
  const auto minimal = unique_minimal_ideal(lattice);
  const std::string mt_label = label_of(mt, lattice);
  if (!(*c.socle == mt))
    return CheckResult::failed(name, "Ann(m) != m^t",
                               {{"socle", label_of(*c.socle, lattice)}, {"m^t", mt_label}});
  if (!minimal || !(*minimal == mt))
    return CheckResult::failed(
        name, "m^t is not the unique minimal ideal",
        {{"minimal", minimal ? nlohmann::json(label_of(*minimal, lattice)) : nlohmann::json(nullptr)},
         {"m^t", mt_label}});
  return CheckResult::passed(name, "Ann(m) = m^" + std::to_string(c.t) + " = " + mt_label +
                                       " is the unique minimal ideal");
}

Suite parse_suite(const std::string& s) {
  if (s == "lemmas") return Suite::lemmas;
  if (s == "shapes") return Suite::shapes;
  if (s == "genus") return Suite::genus;
  if (s == "all") return Suite::all;
  throw Error("unknown suite '" + s + "'; expected lemmas, shapes, genus or all");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::lemmas: return "lemmas";
    case Suite::shapes: return "shapes";
    case Suite::genus: return "genus";
    case Suite::all: return "all";
  }
  return "unknown";
}

std::vector<CheckResult> skipped_by_design() {
  auto entry = [](std::string check, std::string hypothesis) {
    return CheckResult::skipped(std::move(check), "skipped by design; unmet hypothesis: " + std::move(hypothesis));
  };
  return {
      entry("infinite_field_subspace_union",
            "a vector space over an infinite field; every residue field of a finite ring is finite"),
      entry("infinite_residue_vdim_reduction",
            "|R/m| infinite with t >= 5; finite rings have finite residue fields"),
      entry("noetherian_local_is_artinian",
            "a Noetherian local ring that is not Artinian; every finite ring is Artinian"),
      entry("finitely_many_ideals",
            "a ring with infinitely many ideals; holds vacuously for finite rings, sub-claims are "
            "checked per ring as unique_minimal_socle and gorenstein_*"),
      entry("nonstabilizing_powers_shape",
            "m^n != m^(n+1) for every n; powers of m in a finite ring reach (0)"),
      entry("infinite_ideal_branch_t2",
            "|R/m| infinite so that R has infinitely many ideals; finite analog checked as "
            "gorenstein_t2_star_shape and gorenstein_t2_genus_zero"),
      entry("infinite_ideal_branch_t3",
            "|R/m| infinite so that R has infinitely many ideals; finite analog checked as "
            "gorenstein_t3_double_star_shape and gorenstein_t3_genus_zero"),
  };
}

namespace {

bool profile_is(const RingClassification& c, int t, std::vector<int> profile) {
  return c.is_local && !c.is_field && c.is_gorenstein && c.t == t && c.vdim_profile == profile;
}

std::optional<Vertex> ag_vertex_of(const Ideal& i, const IdealLattice& lattice) {
  const auto ids = ag_vertex_ideals(lattice);
  const auto k = lattice.index_of(i);
  auto it = std::find(ids.begin(), ids.end(), *k);
  if (it == ids.end()) return std::nullopt;
  return static_cast<Vertex>(it - ids.begin());
}

nlohmann::json edge_list(const SimpleGraph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [u, v] : g.edges()) out.push_back({g.label(u), g.label(v)});
  return out;
}

std::string describe(const SimpleGraph& g, const ShapeMatch& m) {
  std::ostringstream os;
  os << "centers {";
  for (std::size_t k = 0; k < m.centers.size(); ++k) os << (k ? "," : "") << g.label(m.centers[k]);
  os << "}, " << m.leaves.size() << " leaves, " << m.matching.size() << " matching edges";
  return os.str();
}

void lemma_checks(const FiniteRing& r, const IdealLattice& lattice, const RingClassification& c,
                  std::vector<CheckResult>& out) {
  for (auto& x : check_subideal_count_lemma(r, lattice, c)) out.push_back(std::move(x));
  for (auto& x : check_socle_containment_lemma(r, lattice, c)) out.push_back(std::move(x));
  out.push_back(check_spir_chain_lemma(r, lattice, c));
  out.push_back(check_unique_minimal_and_socle(r, lattice, c));

  {
    const std::string name = "classification_consistency";
    std::vector<std::string> problems;
    if (c.is_local && c.m) {
      int total = std::accumulate(c.vdim_profile.begin(), c.vdim_profile.end(), 0);
      std::size_t size = 1;
      for (int k = 0; k < total; ++k) size *= c.residue_size;
      if (size != c.m->size()) problems.push_back("|m| != q^(sum of v.dims)");
      if (c.residue_size * c.m->size() != r.size()) problems.push_back("|R| != q |m|");
      if (c.is_spir && c.ideal_count != static_cast<std::size_t>(c.t) + 2)
        problems.push_back("SPIR ideal count != t + 2");
      if (!c.is_field && c.is_gorenstein != (c.socle_dim == 1)) problems.push_back("Gorenstein flag");
      if (!c.m_power(c.t + 1).is_zero() || (c.t > 0 && c.m_power(c.t).is_zero()))
        problems.push_back("nilpotency index");
    }
    if (problems.empty())
      out.push_back(CheckResult::passed(name, c.is_local ? "local invariants agree" : "non-local"));
    else
      out.push_back(CheckResult::failed(name, problems.front(), {{"problems", problems}}));
  }

  if (profile_is(c, 1, c.vdim_profile)) {
    const std::string name = "gorenstein_t1_two_proper_ideals";
    if (c.ideal_count == 3)
      out.push_back(CheckResult::passed(name, "proper ideals are exactly (0) and m"));
    else
      out.push_back(CheckResult::failed(name, "unexpected ideal count", {{"ideal_count", c.ideal_count}}));
  }
}

void shape_checks(const IdealLattice& lattice, const RingClassification& c, const SimpleGraph& ag,
                  std::vector<CheckResult>& out) {
  const bool planar = is_planar(ag);
  for (ShapeKind kind : {ShapeKind::star_with_matching, ShapeKind::double_star}) {
    const std::string name = to_string(kind) + "_implies_planar";
    auto m = match_shape(ag, kind);
    if (!m)
      out.push_back(CheckResult::skipped(name, "AG matches no " + to_string(kind)));
    else if (planar)
      out.push_back(CheckResult::passed(name, describe(ag, *m) + "; planar"));
    else
      out.push_back(CheckResult::failed(name, describe(ag, *m) + "; not planar", {{"edges", edge_list(ag)}}));
  }

  struct Analog {
    std::string name;
    int t;
    std::vector<int> profile;
    ShapeKind kind;
  };
  for (const Analog& a : {Analog{"gorenstein_t2_star_shape", 2, {2, 1}, ShapeKind::star_with_matching},
                          Analog{"gorenstein_t3_double_star_shape", 3, {2, 1, 1}, ShapeKind::double_star}}) {
    if (!profile_is(c, a.t, a.profile)) continue;
    std::vector<Vertex> centers;
    for (int k = 2; k <= a.t; ++k)
      if (auto v = ag_vertex_of(c.m_power(k), lattice)) centers.push_back(*v);
    auto m = match_shape_with_centers(ag, a.kind, centers);
    if (m)
      out.push_back(CheckResult::passed(a.name, "finite analog: " + describe(ag, *m)));
    else
      out.push_back(CheckResult::failed(a.name, "finite analog: AG does not match " + to_string(a.kind) +
                                                    " centered at the powers of m",
                                        {{"edges", edge_list(ag)}}));
  }
}

void genus_checks(const RingClassification& c, const SimpleGraph& ag, const GenusOptions& opts,
                  std::vector<CheckResult>& out) {
  const GenusResult g = genus_exact(ag, opts);
  if (!g.is_exact()) {
    for (const char* name : {"ag_genus", "planarity_vs_genus", "euler_bound_vs_genus"})
      out.push_back(CheckResult::skipped(name, "budget: " + genus_result_text(g)));
    return;
  }
  const int gamma = g.lower;
  const int witnessed = verify_embedding(ag, *g.witness);
  if (witnessed == gamma)
    out.push_back(CheckResult::passed("ag_genus", "genus " + std::to_string(gamma) + ", witness verified"));
  else
    out.push_back(CheckResult::failed("ag_genus", "witness embedding has a different genus",
                                      {{"reported", gamma}, {"witness_genus", witnessed}}));

  const bool planar = is_planar(ag);
  if (planar == (gamma == 0))
    out.push_back(CheckResult::passed("planarity_vs_genus", planar ? "planar, genus 0" : "non-planar, genus > 0"));
  else
    out.push_back(CheckResult::failed("planarity_vs_genus", "planarity test disagrees with genus",
                                      {{"planar", planar}, {"genus", gamma}}));

  const int bound = euler_lower_bound(ag);
  if (bound <= gamma)
    out.push_back(CheckResult::passed("euler_bound_vs_genus",
                                      std::to_string(bound) + " <= " + std::to_string(gamma)));
  else
    out.push_back(CheckResult::failed("euler_bound_vs_genus", "Euler bound exceeds genus",
                                      {{"bound", bound}, {"genus", gamma}}));

  for (auto [name, t, profile] : {std::tuple{"gorenstein_t2_genus_zero", 2, std::vector<int>{2, 1}},
                                  std::tuple{"gorenstein_t3_genus_zero", 3, std::vector<int>{2, 1, 1}}}) {
    if (!profile_is(c, t, profile)) continue;
    if (gamma == 0)
      out.push_back(CheckResult::passed(name, "finite analog: genus 0"));
    else
      out.push_back(CheckResult::failed(name, "finite analog: positive genus", {{"genus", gamma}}));
  }
}

std::vector<CheckResult> check_ring(const CorpusEntry& entry, const SuiteOptions& opts) {
  std::vector<CheckResult> out;
  std::string fingerprint;
  try {
    const FiniteRing r = resolve_ring(parse_ring_spec(entry.spec));
    fingerprint = r.fingerprint();
    const ValidationReport v = validate_ring(r);
    if (v.status == ValidationStatus::fail) {
      out.push_back(CheckResult::failed("ring_axioms", v.message, {{"axiom", v.axiom}, {"elements", v.witness}}));
    } else {
      out.push_back(v.ok() ? CheckResult::passed("ring_axioms", "all axioms hold")
                           : CheckResult::skipped("ring_axioms", v.message));
      const IdealLattice lattice = all_ideals(r);
      const RingClassification c = classify(r, lattice);
      const bool all = opts.suite == Suite::all;
      if (all || opts.suite == Suite::lemmas) lemma_checks(r, lattice, c, out);
      if (all || opts.suite == Suite::shapes || opts.suite == Suite::genus) {
        const SimpleGraph ag = build_ag(r, lattice);
        if (all || opts.suite == Suite::shapes) shape_checks(lattice, c, ag, out);
        if (all || opts.suite == Suite::genus) genus_checks(c, ag, opts.genus, out);
      }
    }
  } catch (const Error& e) {
    nlohmann::json w = {{"error", e.what()}};
    if (!e.witness().empty()) w["elements"] = e.witness();
    out.push_back(CheckResult::failed("ring_spec", e.what(), w));
  }
  for (auto& c : out) {
    c.ring = entry.name;
    c.fingerprint = fingerprint;
  }
  return out;
}

}  // namespace

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  std::vector<std::vector<CheckResult>> per_ring(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < corpus.size();) per_ring[k] = check_ring(corpus[k], opts);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(corpus.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SuiteReport report;
  auto tally = [&](const CheckResult& c, RingTally* t) {
    int* slot = c.status == CheckStatus::pass ? &report.passed
                : c.status == CheckStatus::fail ? &report.failed
                                                : &report.skipped;
    ++*slot;
    if (t) ++(c.status == CheckStatus::pass ? t->passed : c.status == CheckStatus::fail ? t->failed : t->skipped);
  };
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    RingTally t{corpus[k].name, per_ring[k].empty() ? "" : per_ring[k].front().fingerprint};
    for (auto& c : per_ring[k]) {
      tally(c, &t);
      report.results.push_back(std::move(c));
    }
    report.tallies.push_back(t);
  }
  if (opts.suite == Suite::lemmas || opts.suite == Suite::all)
    for (auto c : skipped_by_design()) {
      c.ring = "*";
      tally(c, nullptr);
      report.results.push_back(std::move(c));
    }
  return report;
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& c : report.results) {
    std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
    os << tag << "  " << c.ring << "  " << c.check << "  " << c.detail;
    if (!c.witness.is_null()) os << "  witness=" << c.witness.dump();
    os << "\n";
  }
  os << "summary: " << report.results.size() << " checks, " << report.passed << " passed, " << report.failed
     << " failed, " << report.skipped << " skipped\n";
  return os.str();
}

nlohmann::json report_json(const SuiteReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : report.results) out.push_back(check_to_json(c));
  return out;
}

std::string report_csv(const SuiteReport& report) {
  std::ostringstream os;
  os << "ring,fingerprint,passed,failed,skipped\n";
  for (const auto& t : report.tallies)
    os << t.ring << "," << t.fingerprint << "," << t.passed << "," << t.failed << "," << t.skipped << "\n";
  os << "total,," << report.passed << "," << report.failed << "," << report.skipped << "\n";
  return os.str();
}

}  // namespace annigraph
