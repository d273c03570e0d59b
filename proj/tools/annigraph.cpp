// annigraph: command-line front end for the ring, graph and genus tools.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 budget exhausted where an exact answer was required.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "annigraph/classify.hpp"
#include "annigraph/genus.hpp"
#include "annigraph/graph.hpp"
#include "annigraph/ideal.hpp"
#include "annigraph/ring_spec.hpp"
#include "annigraph/verify.hpp"

namespace ag = annigraph;

namespace {

enum Exit { ok = 0, verification_failed = 1, invalid_input = 2, budget_exhausted = 3 };

struct Settings {
  std::string format;
  std::string out;
  std::string kind = "ag";
  std::string suite = "all";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t budget_nodes = ag::GenusOptions{}.budget_nodes;
  std::uint64_t budget_ms = ag::GenusOptions{}.budget_ms;
  bool budget_ms_given = false;
  bool bounds_only = false;
  bool timestamp = false;
  std::vector<std::string> specs;
};

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(const Settings& s, std::string body) {
  if (s.timestamp) body = "# generated " + now_utc() + "\n" + body;
  if (s.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f) throw ag::Error("cannot write " + s.out);
  f << body;
}

void emit_json(const Settings& s, nlohmann::json j) {
  if (s.timestamp) j = {{"generated", now_utc()}, {"result", std::move(j)}};
  Settings plain = s;
  plain.timestamp = false;
  emit(plain, j.dump(2) + "\n");
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw ag::Error("unsupported --format '" + f + "' (expected " + list + ")");
}

ag::GenusOptions genus_options(const Settings& s) {
  ag::GenusOptions o;
  o.budget_nodes = s.budget_nodes;
  o.budget_ms = s.budget_ms;
  if (!s.budget_ms_given)
    if (const char* env = std::getenv("ANNIGRAPH_BUDGET_MS")) {
      try {
        o.budget_ms = std::stoull(env);
      } catch (const std::exception&) {
        throw ag::Error(std::string("ANNIGRAPH_BUDGET_MS is not a number: ") + env);
      }
    }
  o.threads = s.threads;
  o.bounds_only = s.bounds_only;
  return o;
}

ag::FiniteRing ring_arg(const Settings& s) { return ag::resolve_ring(ag::parse_ring_spec(s.specs.at(0))); }

// The graph a command operates on: catalog graphs directly, rings via --kind.
ag::SimpleGraph graph_arg(const Settings& s) {
  auto obj = ag::resolve(ag::parse_ring_spec(s.specs.at(0)));
  if (auto* g = std::get_if<ag::SimpleGraph>(&obj)) return *g;
  const auto& r = std::get<ag::FiniteRing>(obj);
  if (s.kind == "ag") return ag::build_ag(r, ag::all_ideals(r));
  if (s.kind == "zdg") return ag::build_zero_divisor_graph(r);
  throw ag::Error("unknown --kind '" + s.kind + "' (expected ag or zdg)");
}

int cmd_info(Settings& s) {
  if (s.format.empty()) s.format = "json";
  require_format(s.format, {"json", "csv"});
  const auto r = ring_arg(s);
  const auto lattice = ag::all_ideals(r);
  const auto c = ag::classify(r, lattice);
  if (s.format == "csv")
    emit(s, ag::classification_csv_header() + "\n" + ag::classification_csv_row(s.specs[0], c) + "\n");
  else
    emit_json(s, ag::classification_to_json(c, lattice));
  return ok;
}

int cmd_ideals(Settings& s) {
  if (s.format.empty()) s.format = "text";
  require_format(s.format, {"text", "json"});
  const auto r = ring_arg(s);
  const auto lattice = ag::all_ideals(r);
  if (s.format == "json") {
    emit_json(s, ag::lattice_to_json(lattice));
    return ok;
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    os << lattice.label(k) << "\t" << lattice[k].size() << "\t{";
    bool first = true;
    lattice[k].members().for_each([&](ag::Elem e) {
      os << (first ? "" : ", ") << r.label(e);
      first = false;
    });
    os << "}\n";
  }
  emit(s, os.str());
  return ok;
}

int cmd_graph(Settings& s) {
  if (s.format.empty()) s.format = "dot";
  require_format(s.format, {"dot", "json"});
  const auto g = graph_arg(s);
  if (s.format == "dot")
    emit(s, ag::to_dot(g));
  else
    emit_json(s, ag::graph_to_json(g));
  return ok;
}

int cmd_genus(Settings& s) {
  if (s.format.empty()) s.format = "text";
  require_format(s.format, {"text", "json"});
  const auto g = graph_arg(s);
  const auto res = ag::genus_exact(g, genus_options(s));
  if (s.format == "json")
    emit_json(s, ag::genus_result_to_json(res));
  else
    emit(s, ag::genus_result_text(res) + "\n");
  if (res.is_exact() || s.bounds_only) return ok;
  return budget_exhausted;
}

int cmd_verify(Settings& s) {
  if (s.format.empty()) s.format = "text";
  require_format(s.format, {"text", "json", "csv"});
  ag::SuiteOptions o;
  o.suite = ag::parse_suite(s.suite);
  o.genus = genus_options(s);
  o.genus.threads = 1;
  o.threads = s.threads;
  std::vector<ag::CorpusEntry> corpus;
  if (s.specs.empty()) {
    corpus = ag::builtin_corpus();
  } else {
    for (const auto& spec : s.specs) {
      ag::parse_ring_spec(spec);  // reject malformed specs before running anything
      corpus.push_back({spec, spec});
    }
  }
  const auto report = ag::run_suite(corpus, o);
  if (s.format == "json")
    emit_json(s, ag::report_json(report));
  else if (s.format == "csv")
    emit(s, ag::report_csv(report));
  else
    emit(s, ag::report_text(report));
  std::cerr << "verify: " << report.passed << " passed, " << report.failed << " failed, " << report.skipped
            << " skipped\n";
  return report.ok() ? ok : verification_failed;
}

int cmd_corpus(Settings& s) {
  if (s.out.empty()) throw ag::Error("corpus requires --out <dir>");
  namespace fs = std::filesystem;
  fs::create_directories(s.out);
  nlohmann::json index = nlohmann::json::array();
  for (const auto& e : ag::builtin_corpus()) {
    const auto r = ag::resolve_ring(ag::parse_ring_spec(e.spec));
    const fs::path file = fs::path(s.out) / (e.name + ".json");
    std::ofstream f(file, std::ios::binary);
    if (!f) throw ag::Error("cannot write " + file.string());
    f << ag::ring_to_json(r).dump() << "\n";
    index.push_back({{"name", e.name}, {"spec", e.spec}, {"file", e.name + ".json"}, {"fingerprint", r.fingerprint()}});
    std::cerr << "wrote " << file.string() << "\n";
  }
  std::ofstream f(fs::path(s.out) / "index.json", std::ios::binary);
  f << index.dump(2) << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annihilating-ideal graphs of finite commutative rings"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Settings s;

  auto* budget_ms = app.add_option("--budget-ms", s.budget_ms, "Wall-clock budget for genus search");
  app.add_option("--budget-nodes", s.budget_nodes, "Search-node budget for genus search");
  app.add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "Output format (text, json, csv or dot, per subcommand)");
  app.add_option("--out", s.out, "Write output to this path instead of stdout");
  app.add_flag("--timestamp", s.timestamp, "Stamp output with the generation time");

  auto ring_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("spec", s.specs, "Ring spec, e.g. zn:12 or cat:f2xy_x2y2")->required()->expected(1);
    return c;
  };
  auto* info = ring_cmd("info", "Print the classification of a ring");
  auto* ideals = ring_cmd("ideals", "List the ideal lattice");
  auto* graph = ring_cmd("graph", "Emit AG(R), the zero-divisor graph, or a catalog graph");
  graph->add_option("--kind", s.kind, "ag or zdg")->check(CLI::IsMember({"ag", "zdg"}));
  auto* genus = ring_cmd("genus", "Genus of AG(R) or of a catalog graph");
  genus->add_option("--kind", s.kind, "ag or zdg")->check(CLI::IsMember({"ag", "zdg"}));
  genus->add_flag("--bounds-only", s.bounds_only, "Report bounds without exhaustive search");
  auto* verify = app.add_subcommand("verify", "Run the check suite over a corpus");
  verify->add_option("--suite", s.suite, "lemmas, shapes, genus or all")
      ->check(CLI::IsMember({"lemmas", "shapes", "genus", "all"}));
  verify->add_option("specs", s.specs, "Ring specs (default: the built-in corpus)");
  auto* corpus = app.add_subcommand("corpus", "Write the built-in corpus as table files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : invalid_input;
  }
  s.budget_ms_given = budget_ms->count() > 0;

  try {
    if (*info) return cmd_info(s);
    if (*ideals) return cmd_ideals(s);
    if (*graph) return cmd_graph(s);
    if (*genus) return cmd_genus(s);
    if (*verify) return cmd_verify(s);
    if (*corpus) return cmd_corpus(s);
  } catch (const ag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid_input;
  }
  return invalid_input;
}
