// Copyright 2026 The unitforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unitforge/construction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "unitforge/error.hpp"
#include "unitforge/number_theory.hpp"

namespace unitforge {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp && r != kSaturated; ++i) r = sat_mul(r, base);
  return r;
}

const std::vector<std::string>& default_variables() {
  static const std::vector<std::string> names{"x", "y", "z", "u", "v", "w"};
  return names;
}

void require_prime(std::uint64_t p, const char* what) {
  if (!nt::is_prime(p)) throw InputError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

ExprPtr wrap(ConstructionExpr::Node n) {
  return std::make_shared<const ConstructionExpr>(ConstructionExpr{std::move(n)});
}

// Expanded list of cyclic orders of an abelian group.
std::vector<std::uint64_t> cyclic_orders(const AbelianType& g) {
  std::vector<std::uint64_t> out;
  for (const auto& f : g.factors()) {
    auto q = nt::checked_pow(f.prime, static_cast<unsigned>(f.exponent));
    if (!q) throw InputError("cyclic factor too large: " + g.to_string());
    for (std::uint64_t c = 0; c < f.count; ++c) out.push_back(*q);
  }
  return out;
}

std::uint64_t group_order_u64(const GroupSpec& g) {
  if (const auto* n = std::get_if<NamedGroup>(&g)) return n->order();
  const BigInt o = std::get<AbelianType>(g).order();
  if (o > BigInt(kSaturated)) return kSaturated;
  return static_cast<std::uint64_t>(o);
}

std::uint64_t module_order(const std::variant<AbelianType, node::GaussianModules>& m) {
  if (const auto* a = std::get_if<AbelianType>(&m)) {
    const BigInt o = a->order();
    return o > BigInt(kSaturated) ? kSaturated : static_cast<std::uint64_t>(o);
  }
  std::uint64_t o = 1;
  for (int k : std::get<node::GaussianModules>(m).ks) o = sat_mul(o, sat_pow(2, k));
  return o;
}

// Upper bound on the order of the evaluated ring; kSaturated for infinite.
std::uint64_t order_bound(const ConstructionExpr& e) {
  return std::visit(
      [](const auto& n) -> std::uint64_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Zn>) {
          return n.n;
        } else if constexpr (std::is_same_v<T, node::GF>) {
          return sat_pow(n.p, static_cast<std::uint64_t>(std::max(n.k, 0)));
        } else if constexpr (std::is_same_v<T, node::GR>) {
          return sat_pow(n.p, static_cast<std::uint64_t>(std::max(n.n, 0)) *
                                  static_cast<std::uint64_t>(std::max(n.lambda, 0)));
        } else if constexpr (std::is_same_v<T, node::TruncPoly>) {
          std::uint64_t dim = 1;
          for (int a : n.exponents) dim = sat_mul(dim, static_cast<std::uint64_t>(std::max(a, 0)));
          return sat_pow(n.p, dim);
        } else if constexpr (std::is_same_v<T, node::GroupAlgebra>) {
          return sat_pow(n.p, group_order_u64(n.group));
        } else if constexpr (std::is_same_v<T, node::UpperTri>) {
          const auto s = static_cast<std::uint64_t>(std::max(n.size, 0));
          return sat_pow(n.p, s * (s + 1) / 2);
        } else if constexpr (std::is_same_v<T, node::Product>) {
          std::uint64_t o = 1;
          for (const auto& c : n.children) o = sat_mul(o, order_bound(*c));
          return o;
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          return sat_mul(order_bound(*n.base), module_order(n.module));
        } else if constexpr (std::is_same_v<T, node::Quotient>) {
          return order_bound(*n.base);
        } else if constexpr (std::is_same_v<T, node::GaussianQuotient>) {
          return sat_pow(2, static_cast<std::uint64_t>(std::max(n.n, 0)) + 1);
        } else {
          return kSaturated;
        }
      },
      e.node);
}

RingPresentation scalar_ring(std::uint64_t n) {
  RingPresentation r;
  r.characteristic = n;
  r.additive_orders = {n};
  r.one = {1 % n};
  r.mul = {{{1 % n}}};
  r.commutative = true;
  return r;
}

// Z_q[t]/(t^k + c_{k-1} t^{k-1} + ... + c_0).
RingPresentation monogenic_ring(std::uint64_t q, const std::vector<std::uint64_t>& c,
                                const std::vector<std::string>& symbol_names) {
  const std::size_t k = c.size();
  // powers[e] = coordinates of t^e for e <= 2k - 2.
  std::vector<Element> powers;
  for (std::size_t e = 0; e < k; ++e) {
    Element v(k, 0);
    v[e] = 1 % q;
    powers.push_back(v);
  }
  for (std::size_t e = k; e + 1 < 2 * k; ++e) {
    const Element& prev = powers.back();
    Element v(k, 0);
    for (std::size_t i = 0; i + 1 < k; ++i) v[i + 1] = prev[i];
    const std::uint64_t top = prev[k - 1];
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = (v[i] + q - nt::mulmod(top, c[i] % q, q)) % q;
    }
    powers.push_back(v);
  }
  RingPresentation r;
  r.characteristic = q;
  r.additive_orders.assign(k, q);
  r.one = powers[0];
  r.mul.assign(k, std::vector<Element>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) r.mul[i][j] = powers[i + j];
  }
  r.commutative = true;
  if (k >= 2) {
    for (const auto& s : symbol_names) r.symbols.emplace_back(s, powers[1]);
  }
  return r;
}

RingPresentation trunc_poly_ring(const node::TruncPoly& n) {
  require_prime(n.p, "truncated polynomial ring");
  const std::size_t r = n.exponents.size();
  if (r == 0) throw InputError("truncated polynomial ring needs at least one variable");
  if (n.variables.size() != r) throw InputError("variable list does not match exponents");
  std::vector<std::uint64_t> stride(r);
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (n.exponents[i] < 1) throw InputError("truncation exponents must be positive");
    stride[i] = dim;
    dim *= static_cast<std::uint64_t>(n.exponents[i]);
  }
  auto exps_of = [&](std::uint64_t idx) {
    std::vector<int> e(r);
    for (std::size_t i = 0; i < r; ++i) {
      e[i] = static_cast<int>(idx % static_cast<std::uint64_t>(n.exponents[i]));
      idx /= static_cast<std::uint64_t>(n.exponents[i]);
    }
    return e;
  };
  RingPresentation out;
  out.characteristic = n.p;
  out.additive_orders.assign(dim, n.p);
  out.one.assign(dim, 0);
  out.one[0] = 1;
  out.mul.assign(dim, std::vector<Element>(dim, Element(dim, 0)));
  for (std::uint64_t a = 0; a < dim; ++a) {
    const auto ea = exps_of(a);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const auto eb = exps_of(b);
      std::uint64_t idx = 0;
      bool vanishes = false;
      for (std::size_t i = 0; i < r && !vanishes; ++i) {
        const int s = ea[i] + eb[i];
        if (s >= n.exponents[i]) vanishes = true;
        idx += static_cast<std::uint64_t>(s) * stride[i];
      }
      if (!vanishes) out.mul[a][b][idx] = 1;
    }
  }
  out.commutative = true;
  for (std::size_t i = 0; i < r; ++i) {
    Element v(dim, 0);
    if (n.exponents[i] > 1) v[stride[i]] = 1;
    out.symbols.emplace_back(n.variables[i], v);
  }
  return out;
}

// Multiplication table of a group on indices 0..|G|-1, identity at 0.
std::vector<std::vector<std::uint64_t>> group_table(const GroupSpec& g, bool& abelian) {
  std::vector<std::vector<std::uint64_t>> t;
  if (const auto* named = std::get_if<NamedGroup>(&g); named && !named->is_abelian()) {
    const std::uint64_t n = named->order() / 2;
    std::uint64_t r = n - 1, tw = 0;
    switch (named->family()) {
      case GroupFamily::Dihedral: break;
      case GroupFamily::GeneralizedQuaternion: tw = n / 2; break;
      case GroupFamily::Semidihedral: r = n / 2 - 1; break;
      case GroupFamily::Modular: r = n / 2 + 1; break;
      default: break;
    }
    // a^i b^j stored at index i + n*j.
    const std::uint64_t order = 2 * n;
    t.assign(order, std::vector<std::uint64_t>(order));
    for (std::uint64_t x = 0; x < order; ++x) {
      const std::uint64_t i = x % n, j = x / n;
      for (std::uint64_t y = 0; y < order; ++y) {
        const std::uint64_t k = y % n, l = y / n;
        std::uint64_t a = (i + (j ? k * r : k)) % n;
        if (j + l == 2) a = (a + tw) % n;
        t[x][y] = a + n * ((j + l) % 2);
      }
    }
    abelian = false;
    return t;
  }
  const AbelianType a = std::holds_alternative<NamedGroup>(g)
                            ? std::get<NamedGroup>(g).abelian_type()
                            : std::get<AbelianType>(g);
  const auto orders = cyclic_orders(a);
  std::uint64_t order = 1;
  for (auto o : orders) order *= o;
  t.assign(order, std::vector<std::uint64_t>(order));
  for (std::uint64_t x = 0; x < order; ++x) {
    for (std::uint64_t y = 0; y < order; ++y) {
      std::uint64_t xx = x, yy = y, idx = 0, stride = 1;
      for (auto o : orders) {
        idx += ((xx % o + yy % o) % o) * stride;
        xx /= o;
        yy /= o;
        stride *= o;
      }
      t[x][y] = idx;
    }
  }
  abelian = true;
  return t;
}

RingPresentation group_algebra_ring(const node::GroupAlgebra& n) {
  require_prime(n.p, "group algebra");
  bool abelian = true;
  const auto t = group_table(n.group, abelian);
  const std::size_t m = t.size();
  RingPresentation out;
  out.characteristic = n.p;
  out.additive_orders.assign(m, n.p);
  out.one.assign(m, 0);
  out.one[0] = 1;
  out.mul.assign(m, std::vector<Element>(m, Element(m, 0)));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) out.mul[x][y][t[x][y]] = 1;
  }
  out.commutative = abelian;
  if (!abelian && m > 2) {
    const std::uint64_t half = m / 2;
    Element a(m, 0), b(m, 0);
    a[1] = 1;
    b[half] = 1;
    out.symbols.emplace_back("a", a);
    out.symbols.emplace_back("b", b);
  }
  return out;
}

RingPresentation upper_tri_ring(const node::UpperTri& n) {
  require_prime(n.p, "upper triangular ring");
  if (n.size < 1) throw InputError("upper triangular size must be positive");
  const int s = n.size;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) cells.emplace_back(i, j);
  }
  const std::size_t m = cells.size();
  auto index_of = [&](int i, int j) {
    return static_cast<std::size_t>(
        std::find(cells.begin(), cells.end(), std::make_pair(i, j)) - cells.begin());
  };
  RingPresentation out;
  out.characteristic = n.p;
  out.additive_orders.assign(m, n.p);
  out.one.assign(m, 0);
  for (int i = 0; i < s; ++i) out.one[index_of(i, i)] = 1;
  out.mul.assign(m, std::vector<Element>(m, Element(m, 0)));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (cells[a].second == cells[b].first) {
        out.mul[a][b][index_of(cells[a].first, cells[b].second)] = 1;
      }
    }
  }
  out.commutative = s == 1;
  return out;
}

RingPresentation product_ring(const std::vector<RingPresentation>& parts) {
  RingPresentation out;
  std::size_t m = 0;
  for (const auto& p : parts) m += p.additive_orders.size();
  out.characteristic = 1;
  out.mul.assign(m, std::vector<Element>(m, Element(m, 0)));
  out.commutative = true;
  std::size_t off = 0;
  for (const auto& p : parts) {
    const std::size_t pm = p.additive_orders.size();
    out.characteristic = nt::lcm(out.characteristic, p.characteristic);
    out.additive_orders.insert(out.additive_orders.end(), p.additive_orders.begin(),
                               p.additive_orders.end());
    out.one.insert(out.one.end(), p.one.begin(), p.one.end());
    for (std::size_t i = 0; i < pm; ++i) {
      for (std::size_t j = 0; j < pm; ++j) {
        std::copy(p.mul[i][j].begin(), p.mul[i][j].end(), out.mul[off + i][off + j].begin() + off);
      }
    }
    out.commutative = out.commutative && p.commutative;
    for (const auto& [name, e] : p.symbols) {
      const bool taken = std::any_of(out.symbols.begin(), out.symbols.end(),
                                     [&](const auto& s) { return s.first == name; });
      if (taken) continue;
      Element v(m, 0);
      std::copy(e.begin(), e.end(), v.begin() + off);
      out.symbols.emplace_back(name, v);
    }
    off += pm;
  }
  return out;
}

// A unital ring homomorphism R -> Z/e, by backtracking over basis images.
std::optional<std::vector<std::uint64_t>> module_hom(const RingPresentation& r, std::uint64_t e) {
  const std::size_t m = r.additive_orders.size();
  // Every constraint is checked at the largest basis index it mentions.
  struct Constraint {
    std::size_t a, b;  // a == m marks the unit constraint
  };
  std::vector<std::vector<Constraint>> at(m);
  auto last_index = [&](const Element& v, std::size_t start) {
    std::size_t hi = start;
    for (std::size_t z = 0; z < m; ++z) {
      if (v[z] != 0) hi = std::max(hi, z);
    }
    return hi;
  };
  at[last_index(r.one, 0)].push_back({m, m});
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      at[last_index(r.mul[a][b], std::max(a, b))].push_back({a, b});
    }
  }
  std::vector<std::uint64_t> v(m, 0);
  auto image = [&](const Element& x) {
    std::uint64_t s = 0;
    for (std::size_t z = 0; z < m; ++z) s = (s + nt::mulmod(x[z], v[z], e)) % e;
    return s;
  };
  std::uint64_t budget = 2'000'000;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return true;
    for (std::uint64_t val = 0; val < e; ++val) {
      if (budget-- == 0) throw InputError("module action search exhausted its budget");
      if (nt::mulmod(r.additive_orders[i] % e, val, e) != 0) continue;
      v[i] = val;
      bool ok = true;
      for (const auto& c : at[i]) {
        if (c.a == m) {
          ok = image(r.one) == 1 % e;
        } else {
          ok = image(r.mul[c.a][c.b]) == nt::mulmod(v[c.a], v[c.b], e);
        }
        if (!ok) break;
      }
      if (ok && self(self, i + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return v;
}

RingPresentation triangular_ring(const RingPresentation& base, const AbelianType& h) {
  const auto orders = cyclic_orders(h);
  std::uint64_t e = 1;
  for (auto o : orders) e = nt::lcm(e, o);
  if (base.characteristic % e != 0) {
    throw InputError("module exponent " + std::to_string(e) +
                     " does not divide the characteristic " + std::to_string(base.characteristic));
  }
  const auto psi = module_hom(base, e);
  if (!psi) {
    throw InputError("no ring homomorphism onto Z/" + std::to_string(e) +
                     " to act on the module");
  }
  const std::size_t m = base.additive_orders.size();
  const std::size_t s = orders.size();
  const std::size_t n = m + s;
  RingPresentation out;
  out.characteristic = base.characteristic;
  out.additive_orders = base.additive_orders;
  out.additive_orders.insert(out.additive_orders.end(), orders.begin(), orders.end());
  out.one = base.one;
  out.one.resize(n, 0);
  out.mul.assign(n, std::vector<Element>(n, Element(n, 0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::copy(base.mul[i][j].begin(), base.mul[i][j].end(), out.mul[i][j].begin());
    }
    for (std::size_t k = 0; k < s; ++k) {
      const std::uint64_t c = (*psi)[i] % orders[k];
      out.mul[i][m + k][m + k] = c;
      out.mul[m + k][i][m + k] = c;
    }
  }
  out.commutative = base.commutative;
  for (const auto& [name, v] : base.symbols) {
    Element w = v;
    w.resize(n, 0);
    out.symbols.emplace_back(name, w);
  }
  for (std::size_t k = 0; k < s; ++k) {
    Element w(n, 0);
    w[m + k] = 1;
    out.symbols.emplace_back("h" + std::to_string(k + 1), w);
  }
  return out;
}

std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                    std::uint64_t p) {
  // b is monic; both store coefficients lowest degree first.
  while (a.size() >= b.size()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - nt::mulmod(lead, b[i], p)) % p;
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = sat_pow(p, static_cast<std::uint64_t>(d));
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<std::uint64_t> g(static_cast<std::size_t>(d) + 1);
      std::uint64_t x = v;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = x % p;
        x /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      const auto rem = poly_mod(f, g, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint64_t c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

RingPresentation evaluate_node(const ConstructionExpr& e, const Limits& limits);

Ring quotient_by_texts(const Ring& base, const std::vector<std::string>& relations) {
  std::vector<Element> gens;
  for (const auto& rel : relations) gens.push_back(parse_element(base, rel));
  return quotient(base, ideal_closure(base, gens));
}

RingPresentation evaluate_node(const ConstructionExpr& e, const Limits& limits) {
  const std::uint64_t bound = order_bound(e);
  if (bound == kSaturated && !is_finite(e)) {
    throw InputError("cannot evaluate the infinite ring " + to_string(e));
  }
  if (bound > limits.ring_order_cap && !std::holds_alternative<node::Quotient>(e.node)) {
    throw CapExceeded(to_string(e), bound, limits.ring_order_cap);
  }
  return std::visit(
      [&](const auto& n) -> RingPresentation {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Zn>) {
          if (n.n < 2) throw InputError("Z[n] needs n >= 2");
          return scalar_ring(n.n);
        } else if constexpr (std::is_same_v<T, node::GF>) {
          require_prime(n.p, "GF");
          if (n.k < 1) throw InputError("GF degree must be positive");
          return monogenic_ring(n.p, least_irreducible(n.p, n.k), {"t"});
        } else if constexpr (std::is_same_v<T, node::GR>) {
          require_prime(n.p, "GR");
          if (n.n < 1 || n.lambda < 1) throw InputError("GR parameters must be positive");
          const auto q = nt::checked_pow(n.p, static_cast<unsigned>(n.n));
          if (!q) throw InputError("GR characteristic overflows");
          return monogenic_ring(*q, least_irreducible(n.p, n.lambda), {"t"});
        } else if constexpr (std::is_same_v<T, node::TruncPoly>) {
          return trunc_poly_ring(n);
        } else if constexpr (std::is_same_v<T, node::GroupAlgebra>) {
          return group_algebra_ring(n);
        } else if constexpr (std::is_same_v<T, node::UpperTri>) {
          return upper_tri_ring(n);
        } else if constexpr (std::is_same_v<T, node::Product>) {
          if (n.children.empty()) throw InputError("empty product");
          std::vector<RingPresentation> parts;
          for (const auto& c : n.children) parts.push_back(evaluate_node(*c, limits));
          return product_ring(parts);
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          if (!std::holds_alternative<AbelianType>(n.module)) {
            throw InputError("Gaussian modules only act over Z[i], which is infinite");
          }
          return triangular_ring(evaluate_node(*n.base, limits), std::get<AbelianType>(n.module));
        } else if constexpr (std::is_same_v<T, node::Quotient>) {
          Ring base(evaluate_node(*n.base, limits), limits);
          return quotient_by_texts(base, n.relations).presentation();
        } else if constexpr (std::is_same_v<T, node::GaussianQuotient>) {
          if (n.n < 1) throw InputError("Z[i]/(1+i)^n needs n >= 1");
          const auto q = std::uint64_t{1} << ((n.n + 1) / 2);
          Ring base(monogenic_ring(q, {1, 0}, {"t", "i"}), limits);
          return quotient_by_texts(base, {"(1+t)^" + std::to_string(n.n)}).presentation();
        } else {
          throw InputError("cannot evaluate the infinite ring " + to_string(e));
        }
      },
      e.node);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> least_irreducible(std::uint64_t p, int k) {
  require_prime(p, "irreducible search");
  if (k < 1) throw InputError("degree must be positive");
  const std::uint64_t count = sat_pow(p, static_cast<std::uint64_t>(k));
  if (count == kSaturated) throw InputError("irreducible search space too large");
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<std::uint64_t> f(static_cast<std::size_t>(k) + 1);
    std::uint64_t x = v;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = x % p;
      x /= p;
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (is_irreducible(f, p)) {
      f.pop_back();
      return f;
    }
  }
  throw Error("no irreducible polynomial found");
}

ExprPtr make_zn(std::uint64_t n) { return wrap(node::Zn{n}); }
ExprPtr make_gf(std::uint64_t p, int k) { return wrap(node::GF{p, k}); }
ExprPtr make_gr(std::uint64_t p, int n, int lambda) { return wrap(node::GR{p, n, lambda}); }

ExprPtr make_trunc_poly(std::uint64_t p, std::vector<int> exponents) {
  if (exponents.size() > default_variables().size()) {
    throw InputError("too many variables for default names");
  }
  std::vector<std::string> vars(default_variables().begin(),
                                default_variables().begin() + static_cast<long>(exponents.size()));
  return wrap(node::TruncPoly{p, std::move(exponents), std::move(vars)});
}

ExprPtr make_group_algebra(std::uint64_t p, GroupSpec g) {
  return wrap(node::GroupAlgebra{p, std::move(g)});
}
ExprPtr make_upper_tri(std::uint64_t p, int size) { return wrap(node::UpperTri{p, size}); }

ExprPtr make_product(std::vector<ExprPtr> children) {
  std::vector<ExprPtr> flat;
  for (auto& c : children) {
    if (const auto* p = std::get_if<node::Product>(&c->node)) {
      flat.insert(flat.end(), p->children.begin(), p->children.end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.size() == 1) return flat.front();
  return wrap(node::Product{std::move(flat)});
}

ExprPtr make_triangular(ExprPtr base, AbelianType module) {
  return wrap(node::Triangular{std::move(base), std::move(module)});
}
ExprPtr make_gaussian_triangular(ExprPtr base, std::vector<int> ks) {
  return wrap(node::Triangular{std::move(base), node::GaussianModules{std::move(ks)}});
}
ExprPtr make_quotient(ExprPtr base, std::vector<std::string> relations) {
  return wrap(node::Quotient{std::move(base), std::move(relations)});
}
ExprPtr make_gaussian_quotient(int n) { return wrap(node::GaussianQuotient{n}); }
ExprPtr make_infinite(node::InfiniteTag tag) { return wrap(node::SymbolicInfinite{tag}); }

std::string to_string(const ConstructionExpr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Zn>) {
          return "Z[" + std::to_string(n.n) + "]";
        } else if constexpr (std::is_same_v<T, node::GF>) {
          return "GF[" + std::to_string(n.p) + "," + std::to_string(n.k) + "]";
        } else if constexpr (std::is_same_v<T, node::GR>) {
          return "GR[" + std::to_string(n.p) + "," + std::to_string(n.n) + "," +
                 std::to_string(n.lambda) + "]";
        } else if constexpr (std::is_same_v<T, node::TruncPoly>) {
          std::vector<std::string> rels;
          for (std::size_t i = 0; i < n.exponents.size(); ++i) {
            rels.push_back(n.variables[i] + "^" + std::to_string(n.exponents[i]));
          }
          return "F" + std::to_string(n.p) + "[" + join(n.variables, ",") + "]/(" +
                 join(rels, ",") + ")";
        } else if constexpr (std::is_same_v<T, node::GroupAlgebra>) {
          return "F" + std::to_string(n.p) + "[" + unitforge::to_string(n.group) + "]";
        } else if constexpr (std::is_same_v<T, node::UpperTri>) {
          return "U" + std::to_string(n.size) + "[F" + std::to_string(n.p) + "]";
        } else if constexpr (std::is_same_v<T, node::Product>) {
          std::vector<std::string> parts;
          for (const auto& c : n.children) parts.push_back(to_string(*c));
          return join(parts, " * ");
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          std::string mod;
          if (const auto* a = std::get_if<AbelianType>(&n.module)) {
            mod = a->to_string();
          } else {
            std::vector<std::string> parts;
            for (int k : std::get<node::GaussianModules>(n.module).ks) {
              parts.push_back("Z[i]/(1+i)^" + std::to_string(k));
            }
            mod = parts.empty() ? "1" : join(parts, "+");
          }
          return "M(" + to_string(*n.base) + ", " + mod + ")";
        } else if constexpr (std::is_same_v<T, node::Quotient>) {
          if (std::holds_alternative<node::TruncPoly>(n.base->node)) {
            std::string s = to_string(*n.base);
            s.pop_back();
            return s + "," + join(n.relations, ",") + ")";
          }
          return "quot(" + to_string(*n.base) + "; " + join(n.relations, ", ") + ")";
        } else if constexpr (std::is_same_v<T, node::GaussianQuotient>) {
          return "Z[i]/(1+i)^" + std::to_string(n.n);
        } else {
          switch (n.tag) {
            case node::InfiniteTag::Z: return "Z";
            case node::InfiniteTag::GaussianZ: return "Z[i]";
            case node::InfiniteTag::LipschitzL: return "L";
          }
          return "?";
        }
      },
      e.node);
}

bool is_finite(const ConstructionExpr& e) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::SymbolicInfinite>) {
          return false;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          return std::all_of(n.children.begin(), n.children.end(),
                             [](const ExprPtr& c) { return is_finite(*c); });
        } else if constexpr (std::is_same_v<T, node::Triangular> ||
                             std::is_same_v<T, node::Quotient>) {
          return is_finite(*n.base);
        } else {
          return true;
        }
      },
      e.node);
}

std::uint64_t characteristic_of(const ConstructionExpr& e, const Limits& limits) {
  return std::visit(
      [&](const auto& n) -> std::uint64_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Zn>) {
          return n.n;
        } else if constexpr (std::is_same_v<T, node::GR>) {
          return nt::checked_pow(n.p, static_cast<unsigned>(n.n)).value_or(0);
        } else if constexpr (std::is_same_v<T, node::GF> || std::is_same_v<T, node::TruncPoly> ||
                             std::is_same_v<T, node::GroupAlgebra> ||
                             std::is_same_v<T, node::UpperTri>) {
          return n.p;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          std::uint64_t c = 1;
          for (const auto& ch : n.children) {
            const std::uint64_t x = characteristic_of(*ch, limits);
            if (x == 0) return 0;
            c = nt::lcm(c, x);
          }
          return c;
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          return characteristic_of(*n.base, limits);
        } else if constexpr (std::is_same_v<T, node::Quotient>) {
          if (!is_finite(*n.base)) throw InputError("quotients of infinite rings are not supported");
          return build_ring(*wrap(n), limits).characteristic();
        } else if constexpr (std::is_same_v<T, node::GaussianQuotient>) {
          return std::uint64_t{1} << ((n.n + 1) / 2);
        } else {
          return 0;
        }
      },
      e.node);
}

RingPresentation evaluate(const ConstructionExpr& e, const Limits& limits) {
  return build_ring(e, limits).presentation();
}

Ring build_ring(const ConstructionExpr& e, const Limits& limits) {
  if (!is_finite(e)) throw InputError("cannot evaluate the infinite ring " + to_string(e));
  return Ring(evaluate_node(e, limits), limits);
}

}  // namespace unitforge
