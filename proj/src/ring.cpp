#include "annigraph/ring.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "annigraph/ideal.hpp"

namespace annigraph {

namespace {

std::string fnv_digest(std::size_t size, Elem one, const std::vector<Elem>& add,
                       const std::vector<Elem>& mul) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (16 * i)) & 0xffff;
      h *= 1099511628211ULL;
    }
  };
  mix(size);
  mix(one);
  for (auto e : add) mix(e);
  for (auto e : mul) mix(e);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void check_size(std::size_t n, std::size_t max_size) {
  if (n > max_size)
    throw Error("ring size " + std::to_string(n) + " exceeds the cap of " +
                std::to_string(max_size));
}

long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

std::string poly_label(const std::vector<long long>& coeffs, const std::vector<std::string>& basis,
                       bool power_notation) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::string mono;
    if (power_notation) {
      mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    } else {
      mono = basis[i] == "1" ? "" : basis[i];
    }
    std::string term;
    if (mono.empty())
      term = std::to_string(coeffs[i]);
    else if (coeffs[i] == 1)
      term = mono;
    else
      term = std::to_string(coeffs[i]) + mono;
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

FiniteRing::FiniteRing(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                       Elem one, std::vector<std::string> labels) {
  if (size == 0) throw Error("ring must have at least one element");
  if (add.size() != size * size || mul.size() != size * size)
    throw Error("tables must be " + std::to_string(size) + "x" + std::to_string(size));
  if (zero >= size || one >= size) throw Error("zero/one index out of range");
  for (std::size_t i = 0; i < add.size(); ++i)
    if (add[i] >= size || mul[i] >= size)
      throw Error("table entry out of range at position " + std::to_string(i),
                  {static_cast<Elem>(i / size), static_cast<Elem>(i % size)});
  if (!labels.empty() && labels.size() != size) throw Error("label count must equal ring size");
  if (labels.empty()) {
    labels.resize(size);
    for (std::size_t i = 0; i < size; ++i) labels[i] = std::to_string(i);
  }

  // Swap indices so that the additive identity sits at 0.
  if (zero != 0) {
    std::vector<Elem> perm(size);
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::swap(perm[0], perm[zero]);
    auto relabel = [&](const std::vector<Elem>& t) {
      std::vector<Elem> out(size * size);
      for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
          out[perm[a] * size + perm[b]] = perm[t[a * size + b]];
      return out;
    };
    add = relabel(add);
    mul = relabel(mul);
    std::swap(labels[0], labels[zero]);
    one = perm[one];
  }

  auto d = std::make_shared<Data>();
  d->size = size;
  d->one = one;
  d->neg.assign(size, 0);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (add[a * size + b] == 0) {
        d->neg[a] = static_cast<Elem>(b);
        break;
      }
  d->fingerprint = fnv_digest(size, one, add, mul);
  d->add = std::move(add);
  d->mul = std::move(mul);
  d->labels = std::move(labels);
  data_ = std::move(d);
}

ValidationReport validate_ring(const FiniteRing& r, const ValidationOptions& opts) {
  const std::size_t n = r.size();
  auto fail = [](std::string axiom, std::vector<Elem> w) {
    ValidationReport rep;
    rep.status = ValidationStatus::fail;
    rep.axiom = std::move(axiom);
    rep.witness = std::move(w);
    std::ostringstream os;
    os << rep.axiom << " fails at (";
    for (std::size_t i = 0; i < rep.witness.size(); ++i) os << (i ? "," : "") << rep.witness[i];
    os << ")";
    rep.message = os.str();
    return rep;
  };

  if (r.one() == r.zero()) return fail("one_ne_zero", {r.one()});

  for (Elem a = 0; a < n; ++a) {
    if (r.add(0, a) != a) return fail("additive_identity", {a});
    bool has_inverse = false;
    for (Elem b = 0; b < n && !has_inverse; ++b) has_inverse = r.add(a, b) == 0;
    if (!has_inverse) return fail("additive_inverse", {a});
    if (r.mul(r.one(), a) != a) return fail("multiplicative_identity", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return fail("additive_commutativity", {a, b});
      if (r.mul(a, b) != r.mul(b, a)) return fail("multiplicative_commutativity", {a, b});
    }

  if (n > opts.triple_check_limit) {
    ValidationReport rep;
    rep.status = ValidationStatus::skipped;
    rep.axiom = "size_guard";
    rep.message = "ring of size " + std::to_string(n) + " exceeds the triple-check limit " +
                  std::to_string(opts.triple_check_limit);
    return rep;
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = r.add(a, b);
      const Elem ab_prod = r.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c)))
          return fail("additive_associativity", {a, b, c});
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c)))
          return fail("multiplicative_associativity", {a, b, c});
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c)))
          return fail("distributivity", {a, b, c});
      }
    }
  return {};
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteRing make_zn(long long n, std::size_t max_size) {
  if (n < 2) throw Error("Z_n requires n >= 2 (got " + std::to_string(n) + ")");
  check_size(static_cast<std::size_t>(n), max_size);
  const auto size = static_cast<std::size_t>(n);
  std::vector<Elem> add(size * size), mul(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      add[a * size + b] = static_cast<Elem>((a + b) % size);
      mul[a * size + b] = static_cast<Elem>((a * b) % size);
    }
  return FiniteRing(size, std::move(add), std::move(mul), 0, 1);
}

FiniteRing make_product(const FiniteRing& a, const FiniteRing& b, std::size_t max_size) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  check_size(n, max_size);
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem x1 = static_cast<Elem>(x / nb), x2 = static_cast<Elem>(x % nb);
    labels[x] = "(" + a.label(x1) + "," + b.label(x2) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Elem y1 = static_cast<Elem>(y / nb), y2 = static_cast<Elem>(y % nb);
      add[x * n + y] = static_cast<Elem>(a.add(x1, y1) * nb + b.add(x2, y2));
      mul[x * n + y] = static_cast<Elem>(a.mul(x1, y1) * nb + b.mul(x2, y2));
    }
  }
  const Elem one = static_cast<Elem>(a.one() * nb + b.one());
  return FiniteRing(n, std::move(add), std::move(mul), 0, one, std::move(labels));
}

FiniteRing make_structure_constants(long long p, std::size_t rank,
                                    std::vector<std::string> basis_labels,
                                    const std::vector<std::vector<std::vector<long long>>>& table,
                                    std::size_t max_size) {
  if (!is_prime(p)) throw Error("structure-constant modulus must be prime (got " + std::to_string(p) + ")");
  if (rank < 1) throw Error("rank must be at least 1");
  if (basis_labels.empty()) {
    basis_labels.push_back("1");
    for (std::size_t i = 1; i < rank; ++i) basis_labels.push_back("e" + std::to_string(i));
  }
  if (basis_labels.size() != rank) throw Error("basis label count must equal rank");
  if (table.size() != rank) throw Error("multiplication table must have rank rows");
  for (const auto& row : table) {
    if (row.size() != rank) throw Error("multiplication table must be rank x rank");
    for (const auto& v : row)
      if (v.size() != rank) throw Error("structure constant vectors must have length rank");
  }

  std::size_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    n *= static_cast<std::size_t>(p);
    check_size(n, max_size);
  }

  using Vec = std::vector<long long>;
  auto basis_product = [&](std::size_t i, std::size_t j) {
    Vec v(rank);
    for (std::size_t k = 0; k < rank; ++k) v[k] = mod(table[i][j][k], p);
    return v;
  };
  auto mul_vec = [&](const Vec& a, const Vec& b) {
    Vec out(rank, 0);
    for (std::size_t i = 0; i < rank; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < rank; ++j) {
        if (!b[j]) continue;
        const Vec e = basis_product(i, j);
        for (std::size_t k = 0; k < rank; ++k) out[k] = mod(out[k] + a[i] * b[j] * e[k], p);
      }
    }
    return out;
  };
  auto unit = [&](std::size_t i) {
    Vec v(rank, 0);
    v[i] = 1;
    return v;
  };

  // Bilinearity means the axioms only need checking on basis elements.
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      if (basis_product(i, j) != basis_product(j, i))
        throw Error("structure constants are not commutative: e" + std::to_string(i) + "*e" +
                        std::to_string(j) + " != e" + std::to_string(j) + "*e" + std::to_string(i),
                    {static_cast<Elem>(i), static_cast<Elem>(j)});
  for (std::size_t i = 0; i < rank; ++i)
    if (basis_product(0, i) != unit(i))
      throw Error("basis element 0 is not the multiplicative identity on e" + std::to_string(i),
                  {0, static_cast<Elem>(i)});
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k)
        if (mul_vec(basis_product(i, j), unit(k)) != mul_vec(unit(i), basis_product(j, k)))
          throw Error("structure constants are not associative on (e" + std::to_string(i) + ",e" +
                          std::to_string(j) + ",e" + std::to_string(k) + ")",
                      {static_cast<Elem>(i), static_cast<Elem>(j), static_cast<Elem>(k)});

  std::vector<Vec> coeffs(n, Vec(rank));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t k = 0; k < rank; ++k) {
      coeffs[x][k] = static_cast<long long>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
    }
  }
  auto index_of = [&](const Vec& v) {
    std::size_t idx = 0;
    for (std::size_t k = rank; k-- > 0;) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(v[k]);
    return static_cast<Elem>(idx);
  };

  // Products of basis pairs, precomputed as element indices.
  std::vector<std::vector<Vec>> prod(rank, std::vector<Vec>(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) prod[i][j] = basis_product(i, j);

  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  Vec acc(rank);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = poly_label(coeffs[x], basis_labels, false);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < rank; ++k) acc[k] = (coeffs[x][k] + coeffs[y][k]) % p;
      add[x * n + y] = index_of(acc);
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < rank; ++i) {
        if (!coeffs[x][i]) continue;
        for (std::size_t j = 0; j < rank; ++j) {
          const long long c = coeffs[x][i] * coeffs[y][j] % p;
          if (!c) continue;
          for (std::size_t k = 0; k < rank; ++k) acc[k] = (acc[k] + c * prod[i][j][k]) % p;
        }
      }
      mul[x * n + y] = index_of(acc);
    }
  }
  return FiniteRing(n, std::move(add), std::move(mul), 0, 1, std::move(labels));
}

FiniteRing make_poly_quotient(long long p, const std::vector<long long>& coeffs, std::size_t max_size) {
  if (!is_prime(p)) throw Error("polynomial quotient modulus must be prime (got " + std::to_string(p) + ")");
  if (coeffs.size() < 2) throw Error("modulus polynomial must have degree >= 1");
  if (mod(coeffs.back(), p) != 1) throw Error("modulus polynomial must be monic");
  const std::size_t deg = coeffs.size() - 1;

  // Represent the quotient as structure constants on the basis 1, x, ..., x^(deg-1).
  std::vector<std::vector<long long>> powers;  // x^k reduced, k < 2*deg - 1
  std::vector<long long> cur(deg, 0);
  if (deg == 1) {
    // Z_p[x]/(x - c): constants only.
    std::vector<std::vector<std::vector<long long>>> t{{{1}}};
    auto r = make_structure_constants(p, 1, {"1"}, t, max_size);
    return r;
  }
  cur[0] = 1;
  for (std::size_t k = 0; k + 1 < 2 * deg; ++k) {
    powers.push_back(cur);
    // multiply by x and reduce with x^deg = -sum coeffs[i] x^i
    const long long top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) cur[i] = mod(cur[i] - top * coeffs[i], p);
  }
  std::vector<std::vector<std::vector<long long>>> table(deg, std::vector<std::vector<long long>>(deg));
  for (std::size_t i = 0; i < deg; ++i)
    for (std::size_t j = 0; j < deg; ++j) table[i][j] = powers[i + j];

  std::vector<std::string> basis;
  for (std::size_t i = 0; i < deg; ++i) basis.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  return make_structure_constants(p, deg, basis, table, max_size);
}

FiniteRing make_galois_field(long long p, const std::vector<long long>& coeffs, std::size_t max_size) {
  FiniteRing r = make_poly_quotient(p, coeffs, max_size);
  for (Elem a = 1; a < r.size(); ++a) {
    bool unit = false;
    for (Elem b = 1; b < r.size() && !unit; ++b) unit = r.mul(a, b) == r.one();
    if (!unit) throw Error("modulus polynomial is reducible: " + r.label(a) + " is not invertible", {a});
  }
  return r;
}

std::vector<Elem> quotient_map(const FiniteRing& r, const Ideal& i) {
  if (!i.ring().same_as(r)) throw Error("ideal belongs to a different ring");
  const std::size_t n = r.size();
  std::vector<Elem> rep(n, static_cast<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    if (rep[a] != n) continue;
    i.members().for_each([&](Elem m) { rep[r.add(a, m)] = a; });
  }
  std::vector<Elem> reps(rep.begin(), rep.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Elem> out(n);
  for (Elem a = 0; a < n; ++a)
    out[a] = static_cast<Elem>(std::lower_bound(reps.begin(), reps.end(), rep[a]) - reps.begin());
  return out;
}

FiniteRing quotient_ring(const FiniteRing& r, const Ideal& i) {
  if (!i.ring().same_as(r)) throw Error("ideal belongs to a different ring");
  if (!is_ideal(r, i.members())) throw Error("member set is not an ideal of the ring");
  if (i.size() == r.size()) throw Error("quotient by the unit ideal is the zero ring");
  const std::vector<Elem> cls = quotient_map(r, i);
  const std::size_t q = r.size() / i.size();
  std::vector<Elem> rep(q);
  for (Elem a = r.size(); a-- > 0;) rep[cls[a]] = a;
  std::vector<Elem> add(q * q), mul(q * q);
  std::vector<std::string> labels(q);
  for (std::size_t x = 0; x < q; ++x) {
    labels[x] = r.label(rep[x]) + "+I";
    for (std::size_t y = 0; y < q; ++y) {
      add[x * q + y] = cls[r.add(rep[x], rep[y])];
      mul[x * q + y] = cls[r.mul(rep[x], rep[y])];
    }
  }
  return FiniteRing(q, std::move(add), std::move(mul), 0, cls[r.one()], std::move(labels));
}

bool is_isomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& phi) {
  if (a.size() != b.size() || phi.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (auto e : phi) {
    if (e >= b.size() || hit[e]) return false;
    hit[e] = true;
  }
  if (phi[a.one()] != b.one()) return false;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (phi[a.add(x, y)] != b.add(phi[x], phi[y]) || phi[a.mul(x, y)] != b.mul(phi[x], phi[y]))
        return false;
  return true;
}

nlohmann::json ring_to_json(const FiniteRing& r) {
  const std::size_t n = r.size();
  nlohmann::json add = nlohmann::json::array(), mul = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a) {
    nlohmann::json ra = nlohmann::json::array(), rm = nlohmann::json::array();
    for (std::size_t b = 0; b < n; ++b) {
      ra.push_back(r.add(static_cast<Elem>(a), static_cast<Elem>(b)));
      rm.push_back(r.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  return {{"size", n}, {"zero", r.zero()}, {"one", r.one()},
          {"add", std::move(add)}, {"mul", std::move(mul)}, {"labels", r.labels()}};
}

FiniteRing ring_from_json(const nlohmann::json& j, std::size_t max_size) {
  try {
    const auto n = j.at("size").get<std::size_t>();
    check_size(n, max_size);
    auto flatten = [n](const nlohmann::json& t, const char* name) {
      if (!t.is_array() || t.size() != n) throw Error(std::string(name) + " table must have size rows");
      std::vector<Elem> out;
      out.reserve(n * n);
      for (const auto& row : t) {
        if (!row.is_array() || row.size() != n) throw Error(std::string(name) + " table rows must have size entries");
        for (const auto& v : row) {
          const auto x = v.get<long long>();
          if (x < 0 || static_cast<std::size_t>(x) >= n) throw Error(std::string(name) + " table entry out of range");
          out.push_back(static_cast<Elem>(x));
        }
      }
      return out;
    };
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteRing(n, flatten(j.at("add"), "add"), flatten(j.at("mul"), "mul"),
                      j.at("zero").get<Elem>(), j.at("one").get<Elem>(), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ring table: ") + e.what());
  }
}

FiniteRing structure_constants_from_json(const nlohmann::json& j, std::size_t max_size) {
  try {
    const auto p = j.at("p").get<long long>();
    const auto rank = j.at("rank").get<std::size_t>();
    std::vector<std::string> basis;
    if (j.contains("basis")) basis = j.at("basis").get<std::vector<std::string>>();
    const auto table = j.at("mul").get<std::vector<std::vector<std::vector<long long>>>>();
    return make_structure_constants(p, rank, std::move(basis), table, max_size);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed structure-constant file: ") + e.what());
  }
}

}  // namespace annigraph
