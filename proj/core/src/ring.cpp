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

#include "unitforge/ring.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

#include "unitforge/error.hpp"
#include "unitforge/number_theory.hpp"

namespace unitforge {

namespace {

constexpr std::size_t kMaxBasis = 64;

using i128 = __int128;

std::string coords_str(const Element& e) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << "]";
  return os.str();
}

// Product of two coordinate vectors straight from the table; used before a
// Ring exists.
Element table_mul(const RingPresentation& r, const Element& a, const Element& b) {
  const std::size_t m = r.additive_orders.size();
  Element out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[j] == 0) continue;
      const Element& t = r.mul[i][j];
      for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t d = r.additive_orders[k];
        std::uint64_t coef = nt::mulmod(a[i], b[j], d);
        out[k] = (out[k] + nt::mulmod(coef, t[k], d)) % d;
      }
    }
  }
  return out;
}

Element unit_vector(std::size_t m, std::size_t i) {
  Element e(m, 0);
  e[i] = 1;
  return e;
}

ValidationReport fail(std::string category, std::string detail) {
  return {false, std::move(category), std::move(detail)};
}

std::uint64_t saturating_order(const std::vector<std::uint64_t>& radices) {
  std::uint64_t n = 1;
  for (std::uint64_t d : radices) {
    if (d != 0 && n > std::numeric_limits<std::uint64_t>::max() / d) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    n *= d;
  }
  return n;
}

}  // namespace

ValidationReport validate(const RingPresentation& r, const Limits& limits) {
  const std::size_t m = r.additive_orders.size();
  if (m == 0) return fail("shape", "empty additive basis");
  if (m > kMaxBasis) return fail("shape", "additive basis longer than 64");
  if (r.one.size() != m) return fail("shape", "one has wrong length");
  if (r.mul.size() != m) return fail("shape", "multiplication table has wrong row count");
  for (std::size_t i = 0; i < m; ++i) {
    if (r.additive_orders[i] < 2) {
      return fail("shape", "additive order " + std::to_string(i) + " is below 2");
    }
    if (r.mul[i].size() != m) return fail("shape", "multiplication row has wrong length");
    for (std::size_t j = 0; j < m; ++j) {
      if (r.mul[i][j].size() != m) return fail("shape", "product entry has wrong length");
      for (std::size_t k = 0; k < m; ++k) {
        if (r.mul[i][j][k] >= r.additive_orders[k]) {
          return fail("shape", "product coordinate out of range at b" + std::to_string(i) +
                                   "*b" + std::to_string(j));
        }
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (r.one[k] >= r.additive_orders[k]) return fail("shape", "one coordinate out of range");
  }

  const std::uint64_t order = saturating_order(r.additive_orders);
  if (order > limits.ring_order_cap) {
    return fail("size cap", "ring order " + std::to_string(order) + " exceeds cap " +
                                std::to_string(limits.ring_order_cap));
  }

  std::uint64_t l = 1;
  for (std::uint64_t d : r.additive_orders) {
    if (r.characteristic == 0 || r.characteristic % d != 0) {
      return fail("characteristic",
                  "additive order " + std::to_string(d) + " does not divide characteristic " +
                      std::to_string(r.characteristic));
    }
    l = nt::lcm(l, d);
  }
  if (l != r.characteristic) {
    return fail("characteristic", "lcm of additive orders is " + std::to_string(l) +
                                      ", not " + std::to_string(r.characteristic));
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t g = nt::gcd(r.additive_orders[i], r.additive_orders[j]);
      for (std::size_t k = 0; k < m; ++k) {
        if (nt::mulmod(g, r.mul[i][j][k], r.additive_orders[k]) != 0) {
          return fail("additive orders", "b" + std::to_string(i) + "*b" + std::to_string(j) +
                                             " is not killed by the additive order");
        }
      }
    }
  }

  if (std::all_of(r.one.begin(), r.one.end(), [](std::uint64_t x) { return x == 0; })) {
    return fail("zero ring", "one equals zero");
  }

  for (std::size_t i = 0; i < m; ++i) {
    Element b = unit_vector(m, i);
    if (table_mul(r, r.one, b) != b || table_mul(r, b, r.one) != b) {
      return fail("unit axiom", "one does not fix b" + std::to_string(i));
    }
  }

  if (r.commutative) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (r.mul[i][j] != r.mul[j][i]) {
          return fail("commutativity", "b" + std::to_string(i) + "*b" + std::to_string(j) +
                                           " != b" + std::to_string(j) + "*b" +
                                           std::to_string(i));
        }
      }
    }
  }

  // (b_i b_j) b_k = sum_a t_ij[a] (b_a b_k) and b_i (b_j b_k) = sum_a t_jk[a] (b_i b_a).
  Element left(m), right(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (std::size_t a = 0; a < m; ++a) {
          const std::uint64_t u = r.mul[i][j][a];
          const std::uint64_t v = r.mul[j][k][a];
          for (std::size_t z = 0; z < m; ++z) {
            const std::uint64_t d = r.additive_orders[z];
            if (u != 0) left[z] = (left[z] + nt::mulmod(u, r.mul[a][k][z], d)) % d;
            if (v != 0) right[z] = (right[z] + nt::mulmod(v, r.mul[i][a][z], d)) % d;
          }
        }
        if (left != right) {
          return fail("associativity", "(b" + std::to_string(i) + "b" + std::to_string(j) +
                                           ")b" + std::to_string(k) + " = " +
                                           coords_str(left) + " but b" + std::to_string(i) +
                                           "(b" + std::to_string(j) + "b" + std::to_string(k) +
                                           ") = " + coords_str(right));
        }
      }
    }
  }
  return {};
}

struct Ring::Impl {
  RingPresentation pres;
  Limits limits;
  std::size_t m = 0;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> strides;
  bool binary = false;
  std::vector<std::uint64_t> masks;  // m*m, binary rings only
  Index one_index = 0;

  void decode(Index x, std::uint64_t* out) const {
    for (std::size_t i = 0; i < m; ++i) {
      out[i] = x % pres.additive_orders[i];
      x /= pres.additive_orders[i];
    }
  }
  Index encode(const std::uint64_t* c) const {
    Index x = 0;
    for (std::size_t i = 0; i < m; ++i) x += (c[i] % pres.additive_orders[i]) * strides[i];
    return x;
  }
  void mul_raw(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
    std::fill(out, out + m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[j] == 0) continue;
        const Element& t = pres.mul[i][j];
        for (std::size_t k = 0; k < m; ++k) {
          if (t[k] == 0) continue;
          const std::uint64_t d = pres.additive_orders[k];
          std::uint64_t coef = nt::mulmod(a[i], b[j], d);
          out[k] = (out[k] + nt::mulmod(coef, t[k], d)) % d;
        }
      }
    }
  }
  Index mul_binary(Index a, Index b) const {
    Index out = 0;
    for (Index x = a; x != 0; x &= x - 1) {
      const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(x));
      const std::uint64_t* row = &masks[i * m];
      for (Index y = b; y != 0; y &= y - 1) {
        out ^= row[__builtin_ctzll(y)];
      }
    }
    return out;
  }
};

Ring::Ring(RingPresentation presentation, const Limits& limits) {
  ValidationReport report = validate(presentation, limits);
  if (!report.ok) {
    if (report.failure == "size cap") {
      throw CapExceeded("ring presentation", saturating_order(presentation.additive_orders),
                        limits.ring_order_cap);
    }
    throw InputError("invalid ring presentation (" + report.failure + "): " + report.detail);
  }
  auto impl = std::make_shared<Impl>();
  impl->pres = std::move(presentation);
  impl->limits = limits;
  impl->m = impl->pres.additive_orders.size();
  impl->strides.resize(impl->m);
  for (std::size_t i = 0; i < impl->m; ++i) {
    impl->strides[i] = impl->order;
    impl->order *= impl->pres.additive_orders[i];
  }
  impl->binary = std::all_of(impl->pres.additive_orders.begin(),
                             impl->pres.additive_orders.end(),
                             [](std::uint64_t d) { return d == 2; });
  if (impl->binary) {
    impl->masks.resize(impl->m * impl->m);
    for (std::size_t i = 0; i < impl->m; ++i) {
      for (std::size_t j = 0; j < impl->m; ++j) {
        impl->masks[i * impl->m + j] = impl->encode(impl->pres.mul[i][j].data());
      }
    }
  }
  impl->one_index = impl->encode(impl->pres.one.data());
  impl_ = std::move(impl);
}

const RingPresentation& Ring::presentation() const noexcept { return impl_->pres; }
const Limits& Ring::limits() const noexcept { return impl_->limits; }
std::uint64_t Ring::order() const noexcept { return impl_->order; }
std::size_t Ring::dimension() const noexcept { return impl_->m; }
std::uint64_t Ring::characteristic() const noexcept { return impl_->pres.characteristic; }
bool Ring::is_commutative() const noexcept { return impl_->pres.commutative; }
const std::vector<std::uint64_t>& Ring::radices() const noexcept {
  return impl_->pres.additive_orders;
}
bool Ring::is_binary() const noexcept { return impl_->binary; }

Element Ring::zero() const { return Element(impl_->m, 0); }
Element Ring::one() const { return impl_->pres.one; }
Element Ring::basis(std::size_t i) const { return unit_vector(impl_->m, i); }

std::optional<Element> Ring::symbol(std::string_view name) const {
  for (const auto& [n, e] : impl_->pres.symbols) {
    if (n == name) return e;
  }
  return std::nullopt;
}

Element Ring::add(const Element& a, const Element& b) const {
  Element out(impl_->m);
  for (std::size_t i = 0; i < impl_->m; ++i) {
    out[i] = (a[i] + b[i]) % impl_->pres.additive_orders[i];
  }
  return out;
}

Element Ring::neg(const Element& a) const {
  Element out(impl_->m);
  for (std::size_t i = 0; i < impl_->m; ++i) {
    const std::uint64_t d = impl_->pres.additive_orders[i];
    out[i] = (d - a[i] % d) % d;
  }
  return out;
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::scale(const Element& a, std::uint64_t k) const {
  Element out(impl_->m);
  for (std::size_t i = 0; i < impl_->m; ++i) {
    out[i] = nt::mulmod(a[i], k, impl_->pres.additive_orders[i]);
  }
  return out;
}

Element Ring::mul(const Element& a, const Element& b) const {
  Element out(impl_->m);
  impl_->mul_raw(a.data(), b.data(), out.data());
  return out;
}

Element Ring::pow(const Element& a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool Ring::is_zero(const Element& a) const {
  for (std::size_t i = 0; i < impl_->m; ++i) {
    if (a[i] % impl_->pres.additive_orders[i] != 0) return false;
  }
  return true;
}

Index Ring::encode(const Element& a) const {
  if (a.size() != impl_->m) throw InputError("element has wrong length");
  return impl_->encode(a.data());
}

Element Ring::decode(Index i) const {
  Element out(impl_->m);
  impl_->decode(i, out.data());
  return out;
}

Index Ring::one_index() const noexcept { return impl_->one_index; }

Index Ring::add_index(Index a, Index b) const {
  if (impl_->binary) return a ^ b;
  std::array<std::uint64_t, kMaxBasis> x{}, y{};
  impl_->decode(a, x.data());
  impl_->decode(b, y.data());
  for (std::size_t i = 0; i < impl_->m; ++i) {
    x[i] = (x[i] + y[i]) % impl_->pres.additive_orders[i];
  }
  return impl_->encode(x.data());
}

Index Ring::mul_index(Index a, Index b) const {
  if (impl_->binary) return impl_->mul_binary(a, b);
  std::array<std::uint64_t, kMaxBasis> x{}, y{}, z{};
  impl_->decode(a, x.data());
  impl_->decode(b, y.data());
  impl_->mul_raw(x.data(), y.data(), z.data());
  return impl_->encode(z.data());
}

Index Ring::pow_index(Index a, std::uint64_t e) const {
  Index result = impl_->one_index;
  Index base = a;
  while (e > 0) {
    if (e & 1) result = mul_index(result, base);
    e >>= 1;
    if (e > 0) base = mul_index(base, base);
  }
  return result;
}

IdealSubspace::IdealSubspace(Ring ring, AdditiveSubgroup group,
                             std::vector<Element> generating_set)
    : ring_(std::move(ring)), group_(std::move(group)), generating_set_(std::move(generating_set)) {}

std::vector<Element> IdealSubspace::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (Index i = 0; i < ring_.order(); ++i) {
    Element e = ring_.decode(i);
    if (group_.contains(e)) out.push_back(std::move(e));
  }
  return out;
}

IdealSubspace ideal_closure(const Ring& r, std::span<const Element> generators) {
  AdditiveSubgroup group(r.radices());
  std::vector<Element> work;
  std::vector<Element> source;
  for (const auto& g : generators) {
    if (g.size() != r.dimension()) throw InputError("ideal generator has wrong length");
    Element reduced = r.add(g, r.zero());
    source.push_back(reduced);
    if (group.insert(reduced)) work.push_back(reduced);
  }
  while (!work.empty()) {
    Element g = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 0; i < r.dimension(); ++i) {
      Element b = r.basis(i);
      for (Element c : {r.mul(b, g), r.mul(g, b)}) {
        if (group.insert(c)) work.push_back(std::move(c));
      }
    }
  }
  return IdealSubspace(r, std::move(group), std::move(source));
}

namespace {

// Diagonalizes the relation lattice spanned by `rows` (plus c*Z^m) using
// unimodular row and column operations, keeping every entry mod c. On
// return, q maps old coordinates to new ones (x -> xQ) and q_inv holds the
// lifts of the new basis vectors as its rows.
struct SmithResult {
  std::vector<std::uint64_t> diagonal;  // one per column, in [1, c]
  std::vector<std::vector<std::uint64_t>> q;
  std::vector<std::vector<std::uint64_t>> q_inv;
};

i128 modc(i128 x, std::uint64_t c) {
  x %= static_cast<i128>(c);
  if (x < 0) x += c;
  return x;
}

void xgcd(i128 a, i128 b, i128& g, i128& x, i128& y) {
  i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i128 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

SmithResult smith_mod(std::vector<std::vector<std::uint64_t>> a, std::size_t m, std::uint64_t c) {
  SmithResult res;
  res.q.assign(m, std::vector<std::uint64_t>(m, 0));
  res.q_inv.assign(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) res.q[i][i] = res.q_inv[i][i] = 1 % c;
  while (a.size() < m) a.emplace_back(m, 0);
  const std::size_t n = a.size();
  for (auto& row : a) {
    for (auto& x : row) x %= c;
  }

  auto row_combine = [&](std::size_t t, std::size_t i) {
    i128 g, x, y;
    i128 p = a[t][t], b = a[i][t];
    if (b % p == 0) {
      const i128 f = b / p;
      for (std::size_t j = 0; j < m; ++j) {
        a[i][j] = static_cast<std::uint64_t>(modc(static_cast<i128>(a[i][j]) - f * a[t][j], c));
      }
      return;
    }
    xgcd(p, b, g, x, y);
    i128 pa = p / g, pb = b / g;
    for (std::size_t j = 0; j < m; ++j) {
      i128 u = a[t][j], v = a[i][j];
      a[t][j] = static_cast<std::uint64_t>(modc(x * u + y * v, c));
      a[i][j] = static_cast<std::uint64_t>(modc(-pb * u + pa * v, c));
    }
  };
  auto col_combine = [&](std::size_t t, std::size_t j) {
    i128 g, x, y;
    i128 p = a[t][t], b = a[t][j];
    if (b % p == 0) {
      const i128 f = b / p;
      for (std::size_t i = 0; i < n; ++i) {
        a[i][j] = static_cast<std::uint64_t>(modc(static_cast<i128>(a[i][j]) - f * a[i][t], c));
      }
      for (std::size_t i = 0; i < m; ++i) {
        res.q[i][j] = static_cast<std::uint64_t>(modc(static_cast<i128>(res.q[i][j]) - f * res.q[i][t], c));
      }
      for (std::size_t k = 0; k < m; ++k) {
        res.q_inv[t][k] = static_cast<std::uint64_t>(modc(static_cast<i128>(res.q_inv[t][k]) + f * res.q_inv[j][k], c));
      }
      return;
    }
    xgcd(p, b, g, x, y);
    i128 pa = p / g, pb = b / g;
    for (std::size_t i = 0; i < n; ++i) {
      i128 u = a[i][t], v = a[i][j];
      a[i][t] = static_cast<std::uint64_t>(modc(x * u + y * v, c));
      a[i][j] = static_cast<std::uint64_t>(modc(-pb * u + pa * v, c));
    }
    for (std::size_t i = 0; i < m; ++i) {
      i128 u = res.q[i][t], v = res.q[i][j];
      res.q[i][t] = static_cast<std::uint64_t>(modc(x * u + y * v, c));
      res.q[i][j] = static_cast<std::uint64_t>(modc(-pb * u + pa * v, c));
    }
    for (std::size_t k = 0; k < m; ++k) {
      i128 u = res.q_inv[t][k], v = res.q_inv[j][k];
      res.q_inv[t][k] = static_cast<std::uint64_t>(modc(pa * u + pb * v, c));
      res.q_inv[j][k] = static_cast<std::uint64_t>(modc(-y * u + x * v, c));
    }
  };

  std::size_t t = 0;
  for (; t < m; ++t) {
    std::size_t bi = n, bj = m;
    for (std::size_t i = t; i < n; ++i) {
      for (std::size_t j = t; j < m; ++j) {
        if (a[i][j] != 0 && (bi == n || a[i][j] < a[bi][bj])) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == n) break;
    std::swap(a[t], a[bi]);
    if (bj != t) {
      for (auto& row : a) std::swap(row[t], row[bj]);
      for (auto& row : res.q) std::swap(row[t], row[bj]);
      std::swap(res.q_inv[t], res.q_inv[bj]);
    }
    for (;;) {
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] != 0) row_combine(t, i);
      }
      bool touched = false;
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a[t][j] != 0) {
          col_combine(t, j);
          touched = true;
        }
      }
      if (!touched) break;
      bool dirty = false;
      for (std::size_t i = t + 1; i < n; ++i) dirty |= a[i][t] != 0;
      if (!dirty) break;
    }
  }
  res.diagonal.assign(m, c);
  for (std::size_t i = 0; i < t; ++i) {
    res.diagonal[i] = a[i][i] == 0 ? c : nt::gcd(a[i][i], c);
  }
  return res;
}

}  // namespace

Ring quotient(const Ring& r, const IdealSubspace& ideal) {
  if (ideal.is_whole_ring()) {
    throw InputError("trivial quotient: the ideal is the whole ring");
  }
  const std::size_t m = r.dimension();
  const std::uint64_t c = r.characteristic();
  std::vector<std::vector<std::uint64_t>> relations;
  for (std::size_t i = 0; i < m; ++i) {
    if (r.radices()[i] != c) {
      std::vector<std::uint64_t> row(m, 0);
      row[i] = r.radices()[i];
      relations.push_back(std::move(row));
    }
  }
  for (const auto& g : ideal.basis()) relations.push_back(g);
  SmithResult snf = smith_mod(std::move(relations), m, c);

  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < m; ++t) {
    if (snf.diagonal[t] > 1) kept.push_back(t);
  }
  const std::size_t qm = kept.size();

  auto project = [&](const Element& x) {
    Element out(qm, 0);
    for (std::size_t k = 0; k < qm; ++k) {
      const std::size_t t = kept[k];
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < m; ++i) {
        acc = (acc + nt::mulmod(x[i], snf.q[i][t], c)) % c;
      }
      out[k] = acc % snf.diagonal[t];
    }
    return out;
  };
  auto lift = [&](std::size_t k) {
    Element e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = snf.q_inv[kept[k]][i] % r.radices()[i];
    return e;
  };

  RingPresentation out;
  for (std::size_t k = 0; k < qm; ++k) out.additive_orders.push_back(snf.diagonal[kept[k]]);
  out.characteristic = 1;
  for (std::uint64_t d : out.additive_orders) out.characteristic = nt::lcm(out.characteristic, d);
  out.one = project(r.one());
  std::vector<Element> lifts;
  for (std::size_t k = 0; k < qm; ++k) lifts.push_back(lift(k));
  out.mul.assign(qm, std::vector<Element>(qm));
  bool commutative = true;
  for (std::size_t i = 0; i < qm; ++i) {
    for (std::size_t j = 0; j < qm; ++j) {
      out.mul[i][j] = project(r.mul(lifts[i], lifts[j]));
    }
  }
  for (std::size_t i = 0; i < qm && commutative; ++i) {
    for (std::size_t j = i + 1; j < qm; ++j) {
      if (out.mul[i][j] != out.mul[j][i]) {
        commutative = false;
        break;
      }
    }
  }
  out.commutative = commutative;
  for (const auto& [name, e] : r.presentation().symbols) {
    out.symbols.emplace_back(name, project(e));
  }
  Ring q(std::move(out), r.limits());
  if (q.order() * ideal.order() != r.order()) {
    throw Error("quotient order mismatch");
  }
  return q;
}

IdealSubspace frobenius_kernel(const Ring& r, unsigned k) {
  if (!r.is_commutative()) throw InputError("frobenius_kernel needs a commutative ring");
  if (r.characteristic() != 2) throw InputError("frobenius_kernel needs characteristic 2");
  if (k == 0) throw InputError("frobenius_kernel needs k >= 1");
  const std::size_t m = r.dimension();
  const std::uint64_t e = k >= 64 ? 0 : (std::uint64_t{1} << k);
  // x -> x^(2^k) is F_2-linear here, so the kernel is a nullspace.
  std::vector<std::uint64_t> image(m);
  for (std::size_t i = 0; i < m; ++i) {
    Index b = std::uint64_t{1} << i;
    Index y = b;
    if (e == 0) {
      for (unsigned s = 0; s < k; ++s) y = r.mul_index(y, y);
    } else {
      y = r.pow_index(b, e);
    }
    image[i] = y;
  }
  // Gaussian elimination on (image | combination) pairs.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  for (std::size_t i = 0; i < m; ++i) rows.emplace_back(image[i], std::uint64_t{1} << i);
  std::vector<std::uint64_t> kernel;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pivots;
  for (auto [img, comb] : rows) {
    for (const auto& [pimg, pcomb] : pivots) {
      if (img & (std::uint64_t{1} << (63 - __builtin_clzll(pimg)))) {
        img ^= pimg;
        comb ^= pcomb;
      }
    }
    if (img == 0) {
      kernel.push_back(comb);
    } else {
      pivots.emplace_back(img, comb);
      std::sort(pivots.begin(), pivots.end(), std::greater<>());
    }
  }
  std::vector<Element> gens;
  for (std::uint64_t v : kernel) gens.push_back(r.decode(v));
  return ideal_closure(r, gens);
}

}  // namespace unitforge
