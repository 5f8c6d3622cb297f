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

#include "oracles.hpp"

#include <map>
#include <stdexcept>

namespace unitforge::oracle {

namespace {

std::uint64_t naive_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int valuation(std::uint64_t n, std::uint64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += naive_gcd(k, n) == 1 ? 1 : 0;
  return c;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

AbelianType type_from_counts(std::uint64_t order,
                             const std::function<std::uint64_t(std::uint64_t, int)>& count) {
  std::vector<PrimePowerFactor> factors;
  for (std::uint64_t p : prime_divisors(order)) {
    const int top = valuation(order, p);
    // at_least[k] = number of cyclic factors of order >= p^k
    std::vector<int> at_least(static_cast<std::size_t>(top) + 2, 0);
    std::uint64_t prev = 1;
    for (int k = 1; k <= top; ++k) {
      const std::uint64_t c = count(p, k);
      if (c % prev != 0) throw std::logic_error("inconsistent order counts");
      at_least[static_cast<std::size_t>(k)] = valuation(c / prev, p);
      prev = c;
    }
    for (int k = 1; k <= top; ++k) {
      const int exact = at_least[static_cast<std::size_t>(k)] - at_least[static_cast<std::size_t>(k) + 1];
      if (exact > 0) factors.push_back({p, k, static_cast<std::uint64_t>(exact)});
    }
  }
  return AbelianType::from_factors(factors);
}

AbelianType zn_units(std::uint64_t n) {
  std::vector<std::uint64_t> units;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (naive_gcd(k, n) == 1) units.push_back(k % n);
  }
  auto count = [&](std::uint64_t p, int k) {
    std::uint64_t c = 0;
    for (std::uint64_t u : units) {
      std::uint64_t y = u % n;
      for (int i = 0; i < k; ++i) {
        std::uint64_t z = 1 % n;
        for (std::uint64_t j = 0; j < p; ++j) z = z * y % n;
        y = z;
      }
      c += y == 1 % n ? 1 : 0;
    }
    return c;
  };
  return type_from_counts(units.size(), count);
}

AbelianType gaussian_quotient_units(int n) {
  const int m = (n + 1) / 2;
  const std::int64_t mod = std::int64_t{1} << m;
  auto in_ideal = [&](std::int64_t a, std::int64_t b) {
    a = ((a % mod) + mod) % mod;
    b = ((b % mod) + mod) % mod;
    if (a == 0 && b == 0) return true;
    const std::uint64_t norm = static_cast<std::uint64_t>(a * a + b * b);
    return norm != 0 && valuation(norm, 2) >= n;
  };
  auto mul = [&](std::pair<std::int64_t, std::int64_t> x, std::pair<std::int64_t, std::int64_t> y) {
    const std::int64_t re = (x.first * y.first - x.second * y.second) % mod;
    const std::int64_t im = (x.first * y.second + x.second * y.first) % mod;
    return std::pair<std::int64_t, std::int64_t>{(re + mod) % mod, (im + mod) % mod};
  };
  // Each residue class of the quotient holds the same number of pairs.
  const std::uint64_t per_class = (std::uint64_t{1} << (2 * m)) >> n;
  std::vector<std::pair<std::int64_t, std::int64_t>> unit_pairs;
  for (std::int64_t a = 0; a < mod; ++a) {
    for (std::int64_t b = 0; b < mod; ++b) {
      if ((a + b) % 2 == 1) unit_pairs.push_back({a, b});
    }
  }
  const std::uint64_t order = unit_pairs.size() / per_class;
  if (order == 1) return AbelianType();
  auto count = [&](std::uint64_t p, int k) {
    std::uint64_t c = 0;
    for (auto z : unit_pairs) {
      for (int i = 0; i < k; ++i) {
        auto w = z;
        for (std::uint64_t j = 1; j < p; ++j) w = mul(w, z);
        z = w;
      }
      c += in_ideal(z.first - 1, z.second) ? 1 : 0;
    }
    return c / per_class;
  };
  return type_from_counts(order, count);
}

AbelianType truncated_poly_units(std::uint64_t p, int n) {
  using Poly = std::vector<std::uint64_t>;
  auto mul = [&](const Poly& a, const Poly& b) {
    Poly c(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        c[static_cast<std::size_t>(i + j)] =
            (c[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
      }
    }
    return c;
  };
  std::vector<Poly> units;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Poly f(static_cast<std::size_t>(n));
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      f[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    if (f[0] != 0) units.push_back(f);
  }
  Poly one(static_cast<std::size_t>(n), 0);
  one[0] = 1;
  auto count = [&](std::uint64_t q, int k) {
    std::uint64_t c = 0;
    for (const auto& u : units) {
      Poly y = u;
      for (int i = 0; i < k; ++i) {
        Poly z = one;
        for (std::uint64_t j = 0; j < q; ++j) z = mul(z, y);
        y = z;
      }
      c += y == one ? 1 : 0;
    }
    return c;
  };
  return type_from_counts(units.size(), count);
}

std::vector<Index> ring_units(const Ring& r) {
  std::vector<Index> out;
  const Index one = r.one_index();
  for (Index x = 0; x < r.order(); ++x) {
    for (Index y = 0; y < r.order(); ++y) {
      if (r.mul_index(x, y) == one && r.mul_index(y, x) == one) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool units_commute(const Ring& r, const std::vector<Index>& units) {
  for (Index a : units) {
    for (Index b : units) {
      if (r.mul_index(a, b) != r.mul_index(b, a)) return false;
    }
  }
  return true;
}

std::uint64_t element_order(const Ring& r, Index x) {
  std::uint64_t k = 1;
  Index y = x;
  while (y != r.one_index()) {
    y = r.mul_index(y, x);
    ++k;
  }
  return k;
}

AbelianType ring_unit_type(const Ring& r) {
  const auto units = ring_units(r);
  if (!units_commute(r, units)) throw std::logic_error("units do not commute");
  std::map<Index, std::uint64_t> orders;
  for (Index u : units) orders[u] = element_order(r, u);
  auto count = [&](std::uint64_t p, int k) {
    std::uint64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::uint64_t c = 0;
    for (const auto& [u, o] : orders) c += pk % o == 0 ? 1 : 0;
    return c;
  };
  return type_from_counts(units.size(), count);
}

AbelianType random_two_group(std::mt19937_64& rng, int max_rank, int max_exponent) {
  std::uniform_int_distribution<int> rank_dist(0, max_rank);
  std::uniform_int_distribution<int> exp_dist(1, max_exponent);
  const int rank = rank_dist(rng);
  std::vector<PrimePowerFactor> f;
  for (int i = 0; i < rank; ++i) f.push_back({2, exp_dist(rng), 1});
  return AbelianType::from_factors(f);
}

}  // namespace unitforge::oracle
