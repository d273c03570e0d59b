#include "annigraph/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace annigraph {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RingSpec parse() {
    if (s_.empty()) fail("empty ring spec");
    for (std::size_t k = 0; k < s_.size(); ++k)
      if (std::isspace(static_cast<unsigned char>(s_[k]))) fail_at(k, "whitespace is not allowed");
    RingSpec out = spec(0);
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::ostringstream os;
    os << "ring spec parse error at position " << at << ": " << what << " in \"" << s_ << "\"";
    throw Error(os.str());
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  bool eat(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long integer() {
    const std::size_t start = pos_;
    bool neg = eat("-");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1'000'000'000'000LL) fail_at(start, "integer too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    if (pos_ == start + (neg ? 1 : 0)) fail_at(start, "expected an integer");
    return neg ? -v : v;
  }

  std::vector<long long> coeff_list() {
    expect('[');
    std::vector<long long> out{integer()};
    while (eat(",")) out.push_back(integer());
    expect(']');
    return out;
  }

  // Paths and catalog names end at a delimiter of the enclosing product.
  std::string word(int depth, bool path) {
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (depth > 0 && (c == ',' || c == ')')) break;
      if (!path && !(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':')) break;
      ++pos_;
    }
    if (pos_ == start) fail(path ? "expected a path" : "expected a catalog name");
    return std::string(s_.substr(start, pos_ - start));
  }

  RingSpec spec(int depth) {
    RingSpec r;
    const std::size_t start = pos_;
    if (eat("zn:")) {
      r.kind = RingSpec::Kind::zn;
      r.n = integer();
    } else if (eat("gf:") || eat("polyq:")) {
      r.kind = s_[start] == 'g' ? RingSpec::Kind::gf : RingSpec::Kind::polyq;
      r.n = integer();
      expect(':');
      r.coeffs = coeff_list();
    } else if (eat("prod:")) {
      r.kind = RingSpec::Kind::product;
      expect('(');
      r.factors.push_back(spec(depth + 1));
      expect(',');
      r.factors.push_back(spec(depth + 1));
      expect(')');
    } else if (eat("sc:")) {
      r.kind = RingSpec::Kind::sc;
      r.text = word(depth, true);
    } else if (eat("table:")) {
      r.kind = RingSpec::Kind::table;
      r.text = word(depth, true);
    } else if (eat("cat:")) {
      r.kind = RingSpec::Kind::catalog;
      r.text = word(depth, false);
    } else {
      fail("expected one of zn:, gf:, polyq:, prod:, sc:, table:, cat:");
    }
    return r;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

using Table = std::vector<std::vector<std::vector<long long>>>;

// Structure constants for a monomial algebra: `product(i, j)` names the basis
// element e_i e_j, or -1 for zero.
FiniteRing monomial_algebra(long long p, std::vector<std::string> basis,
                            const std::function<int(int, int)>& product) {
  const int k = static_cast<int>(basis.size());
  Table t(k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int prod = i == 0 ? j : (j == 0 ? i : product(i, j));
      if (prod >= 0) t[i][j][prod] = 1;
    }
  return make_structure_constants(p, static_cast<std::size_t>(k), std::move(basis), t);
}

// F_p[x,y]/(x^2, y^2) on the basis 1, x, y, xy.
FiniteRing square_zero_pair(long long p) {
  return monomial_algebra(p, {"1", "x", "y", "xy"}, [](int i, int j) {
    return (i == 1 && j == 2) || (i == 2 && j == 1) ? 3 : -1;
  });
}

// F_2[x,y]/(x^2, xy, y^2): m^2 = 0, socle = m of dimension 2.
FiniteRing f2xy_x2xyy2() {
  return monomial_algebra(2, {"1", "x", "y"}, [](int, int) { return -1; });
}

// F_2[x,y]/(xy, y^2 - x^3) on the basis 1, x, y, x^2, x^3: local Gorenstein
// with m^4 = 0 and v.dim profile [2,1,1].
FiniteRing f2xy_xy_y2x3() {
  return monomial_algebra(2, {"1", "x", "y", "x^2", "x^3"}, [](int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 1 && j == 1) return 3;
    if (i == 2 && j == 2) return 4;
    if (i == 1 && j == 3) return 4;
    return -1;
  });
}

const std::map<std::string, std::function<FiniteRing()>>& ring_catalog() {
  static const std::map<std::string, std::function<FiniteRing()>> cat = {
      {"f2", [] { return make_zn(2); }},
      {"f3", [] { return make_zn(3); }},
      {"f4", [] { return make_galois_field(2, {1, 1, 1}); }},
      {"f5", [] { return make_zn(5); }},
      {"f7", [] { return make_zn(7); }},
      {"f8", [] { return make_galois_field(2, {1, 1, 0, 1}); }},
      {"f9", [] { return make_galois_field(3, {1, 0, 1}); }},
      {"f3x_x2", [] { return make_poly_quotient(3, {0, 0, 1}); }},
      {"f2x_x3", [] { return make_poly_quotient(2, {0, 0, 0, 1}); }},
      {"f2xy_x2y2", [] { return square_zero_pair(2); }},
      {"f3xy_x2y2", [] { return square_zero_pair(3); }},
      {"f2xy_x2xyy2", [] { return f2xy_x2xyy2(); }},
      {"f2xy_xy_y2x3", [] { return f2xy_xy_y2x3(); }},
  };
  return cat;
}

SimpleGraph petersen() {
  SimpleGraph g(10, {}, "petersen");
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

std::optional<SimpleGraph> catalog_graph(const std::string& name) {
  auto number = [](std::string_view s) -> std::optional<std::size_t> {
    if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      return std::nullopt;
    return static_cast<std::size_t>(std::stoul(std::string(s)));
  };
  if (name == "petersen") return petersen();
  if (name.rfind("km:", 0) == 0) {
    const auto colon = name.find(':', 3);
    if (colon == std::string::npos) return std::nullopt;
    auto m = number(std::string_view(name).substr(3, colon - 3));
    auto n = number(std::string_view(name).substr(colon + 1));
    if (!m || !n) return std::nullopt;
    return complete_bipartite(*m, *n);
  }
  if (name.size() > 1 && name[0] == 'k') {
    if (auto n = number(std::string_view(name).substr(1))) return complete_graph(*n);
  }
  return std::nullopt;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string join(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

}  // namespace

RingSpec parse_ring_spec(std::string_view s) { return Parser(s).parse(); }

std::string to_string(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::zn: return "zn:" + std::to_string(spec.n);
    case RingSpec::Kind::gf: return "gf:" + std::to_string(spec.n) + ":[" + join(spec.coeffs) + "]";
    case RingSpec::Kind::polyq: return "polyq:" + std::to_string(spec.n) + ":[" + join(spec.coeffs) + "]";
    case RingSpec::Kind::product:
      return "prod:(" + to_string(spec.factors.at(0)) + "," + to_string(spec.factors.at(1)) + ")";
    case RingSpec::Kind::sc: return "sc:" + spec.text;
    case RingSpec::Kind::table: return "table:" + spec.text;
    case RingSpec::Kind::catalog: return "cat:" + spec.text;
  }
  return {};
}

std::vector<std::string> catalog_ring_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : ring_catalog()) out.push_back(name);
  return out;
}

SpecObject resolve(const RingSpec& spec, std::size_t max_size) {
  switch (spec.kind) {
    case RingSpec::Kind::zn: return make_zn(spec.n, max_size);
    case RingSpec::Kind::gf: return make_galois_field(spec.n, spec.coeffs, max_size);
    case RingSpec::Kind::polyq: return make_poly_quotient(spec.n, spec.coeffs, max_size);
    case RingSpec::Kind::product:
      return make_product(resolve_ring(spec.factors.at(0), max_size),
                          resolve_ring(spec.factors.at(1), max_size), max_size);
    case RingSpec::Kind::sc: return structure_constants_from_json(read_json(spec.text), max_size);
    case RingSpec::Kind::table: return ring_from_json(read_json(spec.text), max_size);
    case RingSpec::Kind::catalog: {
      const auto& cat = ring_catalog();
      if (auto it = cat.find(spec.text); it != cat.end()) return it->second();
      if (auto g = catalog_graph(spec.text)) return *g;
      std::string names;
      for (const auto& n : catalog_ring_names()) names += n + ", ";
      throw Error("unknown catalog name '" + spec.text + "'; available: " + names +
                  "k<n>, km:<m>:<n>, petersen");
    }
  }
  throw Error("unhandled ring spec");
}

FiniteRing resolve_ring(const RingSpec& spec, std::size_t max_size) {
  auto obj = resolve(spec, max_size);
  if (auto* r = std::get_if<FiniteRing>(&obj)) return *r;
  throw Error("'" + to_string(spec) + "' names a graph, not a ring");
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (int n : {4, 6, 8, 9, 12, 16, 18, 24, 27, 30, 36, 49, 64})
    out.push_back({"z" + std::to_string(n), "zn:" + std::to_string(n)});
  out.push_back({"z2xz2", "prod:(zn:2,zn:2)"});
  out.push_back({"z2xz4", "prod:(zn:2,zn:4)"});
  out.push_back({"z3xz3", "prod:(zn:3,zn:3)"});
  for (const char* name : {"f4", "f8", "f3x_x2", "f2x_x3", "f2xy_x2y2", "f2xy_x2xyy2", "f3xy_x2y2"})
    out.push_back({name, std::string("cat:") + name});
  return out;
}

}  // namespace annigraph
