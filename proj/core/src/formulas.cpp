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

#include "unitforge/formulas.hpp"

#include <algorithm>

#include "unitforge/error.hpp"
#include "unitforge/number_theory.hpp"

namespace unitforge::formulas {

namespace {

void require_prime(std::uint64_t p, const char* what) {
  if (!nt::is_prime(p)) {
    throw InputError(std::string(what) + ": " + std::to_string(p) + " is not prime");
  }
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

}  // namespace

bool is_fermat_prime(std::uint64_t q, const FermatMersenneTable& table) {
  if (std::find(table.fermat.begin(), table.fermat.end(), q) != table.fermat.end()) {
    return true;
  }
  // 2^(2^k) + 1 past the table: status is not decided here
  if (q > 2 && nt::is_power_of_two(q - 1)) {
    int m = *nt::exact_log(q - 1, 2);
    if (nt::is_power_of_two(static_cast<std::uint64_t>(m)) &&
        q > *std::max_element(table.fermat.begin(), table.fermat.end())) {
      throw UnknownFermatCandidate(q);
    }
  }
  return false;
}

bool is_mersenne_prime(std::uint64_t p, const FermatMersenneTable& table) {
  if (p > table.mersenne_bound) {
    throw InputError("Mersenne test bound exceeded: " + std::to_string(p));
  }
  if (p < 3 || !nt::is_power_of_two(p + 1)) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool admissible_characteristic(std::uint64_t n, const FermatMersenneTable& table) {
  if (n == 0) throw InputError("characteristic must be positive");
  for (auto [p, e] : nt::factorize(n)) {
    if (p == 2) continue;
    if (e != 1 || !is_fermat_prime(p, table)) return false;
  }
  return true;
}

AbelianType truncated_poly_units(std::uint64_t p, std::uint64_t n) {
  require_prime(p, "truncated_poly_units");
  if (n == 0) throw InputError("truncated_poly_units needs n >= 1");
  std::vector<PrimePowerFactor> factors;
  // k ranges while p^(k-1) < n, i.e. k < 1 + log_p n
  BigInt pk_minus_1 = 1;
  for (int k = 1; pk_minus_1 < n; ++k) {
    if (k > kMaxFactorExponent) throw InputError("truncated_poly_units: n too large");
    BigInt pk = pk_minus_1 * p;
    BigInt pk_plus_1 = pk * p;
    auto cdiv = [&](const BigInt& d) -> BigInt { return (BigInt(n) + d - 1) / d; };
    BigInt count = cdiv(pk_minus_1) - 2 * cdiv(pk) + cdiv(pk_plus_1);
    if (count > 0) factors.push_back({p, k, count.convert_to<std::uint64_t>()});
    pk_minus_1 = pk;
  }
  AbelianType g = AbelianType::from_factors(std::move(factors));
  return product(AbelianType::cyclic(p - 1), g);
}

AbelianType zn_units(std::uint64_t n) {
  if (n == 0) throw InputError("zn_units needs n >= 1");
  AbelianType g;
  for (auto [p, e] : nt::factorize(n)) {
    if (p == 2) {
      if (e == 2) g = product(g, AbelianType::cyclic(2));
      if (e >= 3) {
        g = product(g, AbelianType::cyclic(2));
        g = product(g, AbelianType::cyclic_prime_power(2, e - 2));
      }
    } else {
      g = product(g, AbelianType::cyclic(p - 1));
      if (e >= 2) g = product(g, AbelianType::cyclic_prime_power(p, e - 1));
    }
  }
  return g;
}

AbelianType galois_ring_units(std::uint64_t p, int n, int lambda) {
  require_prime(p, "galois_ring_units");
  if (n < 2) throw InputError("galois_ring_units needs n >= 2; use the field formula");
  if (lambda < 1) throw InputError("galois_ring_units needs lambda >= 1");
  auto q = nt::checked_pow(p, static_cast<unsigned>(lambda));
  if (!q) throw InputError("galois_ring_units: p^lambda overflows");
  AbelianType g = AbelianType::cyclic(*q - 1);
  if (p == 2) {
    g = product(g, AbelianType::cyclic(2));
    if (n > 2) g = product(g, AbelianType::cyclic_prime_power(2, n - 2));
    if (lambda > 1) {
      g = product(g, AbelianType::cyclic_prime_power(2, n - 1,
                                                     static_cast<std::uint64_t>(lambda - 1)));
    }
  } else {
    g = product(g, AbelianType::cyclic_prime_power(p, n - 1,
                                                   static_cast<std::uint64_t>(lambda)));
  }
  return g;
}

AbelianType gaussian_quotient_units(int n) {
  if (n < 1) throw InputError("gaussian_quotient_units needs n >= 1");
  switch (n) {
    case 1: return {};
    case 2: return AbelianType::cyclic(2);
    case 3: return AbelianType::cyclic(4);
    case 4: return parse_abelian("C2xC4");
    default: break;
  }
  const int m = n / 2;
  AbelianType c4 = AbelianType::cyclic(4);
  auto c2pow = [](int e) {
    return e > 0 ? AbelianType::cyclic_prime_power(2, e) : AbelianType{};
  };
  if (n % 2 == 0) return product(product(c2pow(m - 1), c2pow(m - 2)), c4);
  return product(product(c2pow(m - 1), c2pow(m - 1)), c4);
}

AbelianType gaussian_module_additive(int k) {
  if (k < 1) throw InputError("gaussian module needs k >= 1");
  const int m = k / 2;
  auto c2pow = [](int e) {
    return e > 0 ? AbelianType::cyclic_prime_power(2, e) : AbelianType{};
  };
  if (k % 2 == 0) return product(c2pow(m), c2pow(m));
  return product(c2pow(m + 1), c2pow(m));
}

BigInt group_algebra_unit_count(std::uint64_t p, std::uint64_t group_order) {
  require_prime(p, "group_algebra_unit_count");
  if (group_order == 0 || !nt::exact_log(group_order, p)) {
    throw InputError("group order " + std::to_string(group_order) + " is not a power of " +
                     std::to_string(p));
  }
  BigInt r = p - 1;
  for (std::uint64_t i = 1; i < group_order; ++i) r *= p;
  return r;
}

}  // namespace unitforge::formulas
