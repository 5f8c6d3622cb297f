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

#include "unitforge/units.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "unitforge/error.hpp"
#include "unitforge/number_theory.hpp"

namespace unitforge {

namespace {

bool binary_injective(const Ring& r, Index x, bool left) {
  const std::size_t m = r.dimension();
  std::uint64_t basis[64] = {};
  std::size_t rank = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const Index b = Index{1} << j;
    std::uint64_t v = left ? r.mul_index(x, b) : r.mul_index(b, x);
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        ++rank;
        break;
      }
      v ^= basis[top];
    }
    if (v == 0) return false;
  }
  return rank == m;
}

bool generic_injective(const Ring& r, const Element& x, bool left) {
  AdditiveSubgroup image(r.radices());
  for (std::size_t j = 0; j < r.dimension(); ++j) {
    const Element b = r.basis(j);
    image.insert(left ? r.mul(x, b) : r.mul(b, x));
  }
  return image.order() == r.order();
}

bool is_unit(const Ring& r, Index x) {
  if (r.is_binary()) return binary_injective(r, x, true) && binary_injective(r, x, false);
  const Element e = r.decode(x);
  return generic_injective(r, e, true) && generic_injective(r, e, false);
}

unsigned worker_count(unsigned requested, std::uint64_t work) {
  if (work < 4096) return 1;
  unsigned t = requested ? requested : std::thread::hardware_concurrency();
  return std::max(1u, std::min(t, 16u));
}

}  // namespace

std::vector<std::uint8_t> unit_mask(const Ring& r, unsigned threads) {
  const std::uint64_t n = r.order();
  std::vector<std::uint8_t> mask(n, 0);
  const unsigned workers = worker_count(threads, n);
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    for (Index x = lo; x < hi; ++x) mask[x] = is_unit(r, x) ? 1 : 0;
  };
  if (workers == 1) {
    run(0, n);
    return mask;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min(n, w * chunk);
    const std::uint64_t hi = std::min(n, lo + chunk);
    pool.emplace_back(run, lo, hi);
  }
  for (auto& t : pool) t.join();
  return mask;
}

std::vector<Index> enumerate_units(const Ring& r, unsigned threads) {
  const auto mask = unit_mask(r, threads);
  std::vector<Index> out;
  for (Index x = 0; x < mask.size(); ++x) {
    if (mask[x]) out.push_back(x);
  }
  return out;
}

std::uint64_t element_order(const Ring& r, Index x, std::uint64_t group_order) {
  const Index one = r.one_index();
  std::uint64_t order = 1;
  for (const auto& [p, e] : nt::factorize(group_order)) {
    std::uint64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    Index y = r.pow_index(x, group_order / pe);
    while (y != one) {
      y = r.pow_index(y, p);
      order *= p;
    }
  }
  return order;
}

AbelianType abelian_type_from_histogram(const std::map<std::uint64_t, std::uint64_t>& hist) {
  std::uint64_t n = 0;
  for (const auto& [o, c] : hist) n += c;
  if (n == 0) throw InputError("empty histogram");
  std::vector<PrimePowerFactor> factors;
  for (const auto& [p, e] : nt::factorize(n)) {
    // at_least[k] = number of cyclic factors of order >= p^k.
    std::vector<std::uint64_t> at_least{0};
    std::uint64_t prev = 1, pk = 1;
    for (int k = 1; prev < n; ++k) {
      pk *= p;
      std::uint64_t nk = 0;
      for (const auto& [o, c] : hist) {
        if (pk % o == 0) nk += c;
      }
      if (nk % prev != 0) throw Error("order counts are not those of an abelian group");
      const auto f = nt::exact_log(nk / prev, p);
      if (!f) throw Error("order counts are not those of an abelian group");
      if (*f == 0) break;
      at_least.push_back(static_cast<std::uint64_t>(*f));
      prev = nk;
      if (k > kMaxFactorExponent) throw Error("exponent too large");
    }
    (void)e;
    for (std::size_t k = 1; k < at_least.size(); ++k) {
      const std::uint64_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      if (at_least[k] < next) throw Error("order counts are not those of an abelian group");
      if (at_least[k] > next) {
        factors.push_back({p, static_cast<int>(k), at_least[k] - next});
      }
    }
  }
  return AbelianType::from_factors(std::move(factors));
}

std::optional<NamedGroup> identify_small(std::uint64_t order,
                                         const std::map<std::uint64_t, std::uint64_t>& hist,
                                         std::uint64_t center_order) {
  auto count = [&](std::uint64_t o) {
    auto it = hist.find(o);
    return it == hist.end() ? std::uint64_t{0} : it->second;
  };
  if (order == 8 && center_order == 2) {
    if (count(2) == 5 && count(4) == 2) return NamedGroup(GroupFamily::Dihedral, 8);
    if (count(2) == 1 && count(4) == 6) return NamedGroup(GroupFamily::GeneralizedQuaternion, 8);
  }
  if (order == 16) {
    const auto c2 = count(2), c4 = count(4), c8 = count(8);
    if (center_order == 2 && c8 == 4) {
      if (c2 == 9 && c4 == 2) return NamedGroup(GroupFamily::Dihedral, 16);
      if (c2 == 1 && c4 == 10) return NamedGroup(GroupFamily::GeneralizedQuaternion, 16);
      if (c2 == 5 && c4 == 6) return NamedGroup(GroupFamily::Semidihedral, 16);
    }
    if (center_order == 4 && c2 == 3 && c4 == 4 && c8 == 8) {
      return NamedGroup(GroupFamily::Modular, 16);
    }
  }
  return std::nullopt;
}

UnitGroupReport unit_group_report(const Ring& r, unsigned threads) {
  const auto mask = unit_mask(r, threads);
  std::vector<Index> units;
  for (Index x = 0; x < mask.size(); ++x) {
    if (mask[x]) units.push_back(x);
  }
  UnitGroupReport rep;
  rep.order = units.size();
  for (Index u : units) ++rep.order_histogram[element_order(r, u, rep.order)];

  // Grow a subgroup one generator at a time; every new generator must
  // commute with the earlier ones.
  std::vector<std::uint8_t> in_sub(mask.size(), 0);
  std::vector<Index> sub{r.one_index()};
  std::vector<Index> gens;
  in_sub[r.one_index()] = 1;
  for (Index u : units) {
    if (in_sub[u]) continue;
    for (Index g : gens) {
      if (r.mul_index(u, g) != r.mul_index(g, u)) {
        rep.abelian = false;
        break;
      }
    }
    if (!rep.abelian) break;
    gens.push_back(u);
    const std::size_t old = sub.size();
    Index power = u;
    while (!in_sub[power]) {
      for (std::size_t i = 0; i < old; ++i) {
        const Index y = r.mul_index(sub[i], power);
        in_sub[y] = 1;
        sub.push_back(y);
      }
      power = r.mul_index(power, u);
    }
  }

  if (rep.abelian) {
    rep.abelian_type = abelian_type_from_histogram(rep.order_histogram);
    return rep;
  }
  if (rep.order <= 4096) {
    std::uint64_t center = 0;
    for (Index z : units) {
      bool central = true;
      for (Index u : units) {
        if (r.mul_index(z, u) != r.mul_index(u, z)) {
          central = false;
          break;
        }
      }
      center += central ? 1 : 0;
    }
    rep.center_order = center;
    rep.identified = identify_small(rep.order, rep.order_histogram, center);
  }
  return rep;
}

IdealSubspace jacobson_radical(const Ring& r, RadicalMethod method) {
  const std::uint64_t n = r.order();
  AdditiveSubgroup group(r.radices());
  std::uint64_t members = 0;
  auto admit = [&](const Element& x) {
    ++members;
    if (!group.contains(x)) group.insert(x);
  };
  if (method == RadicalMethod::Automatic && r.is_commutative()) {
    const std::uint64_t e = std::bit_ceil(static_cast<std::uint64_t>(std::bit_width(n)) + 1);
    for (Index x = 0; x < n; ++x) {
      if (r.pow_index(x, e) == 0) admit(r.decode(x));
    }
  } else {
    const auto mask = unit_mask(r);
    const Index one = r.one_index();
    for (Index x = 0; x < n; ++x) {
      if (!mask[r.add_index(one, x)]) continue;
      const Element xe = r.decode(x);
      // Elements already spanned by members are members.
      if (group.contains(xe)) {
        ++members;
        continue;
      }
      bool inside = true;
      for (Index a = 0; a < n && inside; ++a) {
        inside = mask[r.add_index(one, r.mul_index(a, x))] != 0;
      }
      if (inside) admit(xe);
    }
  }
  if (group.order() != members) throw Error("radical is not an additive subgroup");
  std::vector<Element> gens = group.generators();
  return IdealSubspace(r, std::move(group), std::move(gens));
}

}  // namespace unitforge
