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

#include "unitforge/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "unitforge/error.hpp"
#include "unitforge/number_theory.hpp"

namespace unitforge {

namespace {

constexpr std::uint64_t kMaxParsedMultiplicity = std::uint64_t{1} << 16;

bool factor_less(const PrimePowerFactor& a, const PrimePowerFactor& b) {
  // descending by (prime, exponent)
  if (a.prime != b.prime) return a.prime > b.prime;
  return a.exponent > b.exponent;
}

BigInt big_pow(std::uint64_t p, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("malformed number '" + std::string(s) + "' in group '" +
                     std::string(context) + "'");
  }
  return v;
}

}  // namespace

AbelianType AbelianType::from_factors(std::vector<PrimePowerFactor> factors) {
  std::map<std::pair<std::uint64_t, int>, std::uint64_t> merged;
  for (const auto& f : factors) {
    if (!nt::is_prime(f.prime)) {
      throw InputError("cyclic factor prime " + std::to_string(f.prime) + " is not prime");
    }
    if (f.exponent < 1 || f.exponent > kMaxFactorExponent) {
      throw InputError("cyclic factor exponent " + std::to_string(f.exponent) +
                       " outside [1, 64]");
    }
    if (f.count == 0) continue;
    merged[{f.prime, f.exponent}] += f.count;
  }
  AbelianType g;
  for (const auto& [key, count] : merged) {
    g.factors_.push_back({key.first, key.second, count});
  }
  std::sort(g.factors_.begin(), g.factors_.end(), factor_less);
  return g;
}

AbelianType AbelianType::cyclic(std::uint64_t order) {
  const std::uint64_t orders[] = {order};
  return canonicalize(orders);
}

AbelianType AbelianType::cyclic_prime_power(std::uint64_t prime, int exponent,
                                            std::uint64_t count) {
  return from_factors({{prime, exponent, count}});
}

std::uint64_t AbelianType::rank() const noexcept {
  std::uint64_t r = 0;
  for (const auto& f : factors_) r += f.count;
  return r;
}

BigInt AbelianType::order() const {
  BigInt r = 1;
  for (const auto& f : factors_) {
    BigInt q = big_pow(f.prime, f.exponent);
    for (std::uint64_t i = 0; i < f.count; ++i) r *= q;
  }
  return r;
}

BigInt AbelianType::exponent() const {
  BigInt r = 1;
  std::uint64_t last_prime = 0;
  for (const auto& f : factors_) {
    // factors are sorted so the first entry per prime has the largest exponent
    if (f.prime != last_prime) {
      r *= big_pow(f.prime, f.exponent);
      last_prime = f.prime;
    }
  }
  return r;
}

std::vector<std::uint64_t> AbelianType::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& f : factors_) {
    if (out.empty() || out.back() != f.prime) out.push_back(f.prime);
  }
  return out;
}

bool AbelianType::is_p_group(std::uint64_t p) const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [p](const PrimePowerFactor& f) { return f.prime == p; });
}

bool AbelianType::is_elementary_abelian() const noexcept {
  return primes().size() <= 1 &&
         std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePowerFactor& f) { return f.exponent == 1; });
}

std::uint64_t AbelianType::multiplicity(std::uint64_t p, int e) const noexcept {
  for (const auto& f : factors_) {
    if (f.prime == p && f.exponent == e) return f.count;
  }
  return 0;
}

int AbelianType::max_exponent(std::uint64_t p) const noexcept {
  for (const auto& f : factors_) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

std::vector<int> AbelianType::exponents(std::uint64_t p) const {
  std::vector<int> out;
  for (const auto& f : factors_) {
    if (f.prime != p) continue;
    out.insert(out.end(), f.count, f.exponent);
  }
  return out;
}

std::string AbelianType::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "x";
    out += "C" + big_pow(f.prime, f.exponent).str();
    if (f.count > 1) out += "^" + std::to_string(f.count);
  }
  return out;
}

std::strong_ordering operator<=>(const AbelianType& a, const AbelianType& b) {
  auto key = [](const PrimePowerFactor& f) {
    return std::make_tuple(f.prime, f.exponent, f.count);
  };
  return std::lexicographical_compare_three_way(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
      [&](const PrimePowerFactor& x, const PrimePowerFactor& y) { return key(x) <=> key(y); });
}

AbelianType canonicalize(std::span<const std::uint64_t> orders) {
  std::vector<PrimePowerFactor> factors;
  for (std::uint64_t n : orders) {
    if (n == 0) throw InputError("cyclic order must be positive");
    for (auto [p, e] : nt::factorize(n)) factors.push_back({p, e, 1});
  }
  return AbelianType::from_factors(std::move(factors));
}

AbelianType product(const AbelianType& a, const AbelianType& b) {
  std::vector<PrimePowerFactor> all = a.factors();
  all.insert(all.end(), b.factors().begin(), b.factors().end());
  return AbelianType::from_factors(std::move(all));
}

AbelianType power_down(const AbelianType& g, unsigned k) {
  if (!g.is_p_group(2)) {
    throw InputError("power_down needs a 2-group, got " + g.to_string());
  }
  std::vector<PrimePowerFactor> out;
  for (const auto& f : g.factors()) {
    if (f.exponent > static_cast<int>(k)) {
      out.push_back({2, f.exponent - static_cast<int>(k), f.count});
    }
  }
  return AbelianType::from_factors(std::move(out));
}

std::uint64_t rank(const AbelianType& g) { return g.rank(); }

BigInt exponent(const AbelianType& g) { return g.exponent(); }

BigInt count_order_dividing(const AbelianType& g, const BigInt& n) {
  if (n <= 0) throw InputError("count_order_dividing needs n >= 1");
  BigInt result = 1;
  for (const auto& f : g.factors()) {
    // gcd(p^e, n) = p^min(e, v_p(n))
    int v = 0;
    BigInt m = n;
    while (v < f.exponent && m % f.prime == 0) {
      m /= f.prime;
      ++v;
    }
    BigInt part = big_pow(f.prime, v);
    for (std::uint64_t i = 0; i < f.count; ++i) result *= part;
  }
  return result;
}

bool has_cyclic_summand(const AbelianType& g, std::uint64_t p, int e) {
  return g.multiplicity(p, e) > 0;
}

bool has_subgroup(const AbelianType& g, const AbelianType& h) {
  for (std::uint64_t p : h.primes()) {
    auto he = h.exponents(p);
    auto ge = g.exponents(p);
    if (he.size() > ge.size()) return false;
    for (std::size_t i = 0; i < he.size(); ++i) {
      if (he[i] > ge[i]) return false;
    }
  }
  return true;
}

std::optional<AbelianType> remove_factors(const AbelianType& g, const AbelianType& h) {
  std::vector<PrimePowerFactor> out = g.factors();
  for (const auto& f : h.factors()) {
    auto it = std::find_if(out.begin(), out.end(), [&](const PrimePowerFactor& x) {
      return x.prime == f.prime && x.exponent == f.exponent;
    });
    if (it == out.end() || it->count < f.count) return std::nullopt;
    it->count -= f.count;
  }
  return AbelianType::from_factors(std::move(out));
}

std::string_view family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::Dihedral: return "dihedral";
    case GroupFamily::GeneralizedQuaternion: return "generalized quaternion";
    case GroupFamily::Semidihedral: return "semidihedral";
    case GroupFamily::Modular: return "modular";
    case GroupFamily::AbelianAlmostCyclic: return "abelian almost cyclic";
    case GroupFamily::Cyclic: return "cyclic";
  }
  return "?";
}

NamedGroup::NamedGroup(GroupFamily family, std::uint64_t order)
    : family_(family), order_(order) {
  auto pp = nt::as_prime_power(order);
  if (!pp) {
    throw InputError("named group order " + std::to_string(order) +
                     " is not a prime power");
  }
  switch (family) {
    case GroupFamily::Dihedral:
    case GroupFamily::GeneralizedQuaternion:
      if (pp->first != 2 || order < 8) {
        throw InputError(std::string(family_name(family)) +
                         " group order must be a power of 2 and at least 8");
      }
      break;
    case GroupFamily::Semidihedral:
    case GroupFamily::Modular:
      if (pp->first != 2 || order < 16) {
        throw InputError(std::string(family_name(family)) +
                         " group order must be a power of 2 and at least 16");
      }
      break;
    case GroupFamily::AbelianAlmostCyclic:
      if (pp->second < 2) {
        throw InputError("abelian almost cyclic non-cyclic group needs order p^2 or more");
      }
      break;
    case GroupFamily::Cyclic:
      break;
  }
}

bool NamedGroup::is_abelian() const noexcept {
  return family_ == GroupFamily::Cyclic || family_ == GroupFamily::AbelianAlmostCyclic;
}

AbelianType NamedGroup::abelian_type() const {
  auto [p, e] = *nt::as_prime_power(order_);
  switch (family_) {
    case GroupFamily::Cyclic:
      return AbelianType::cyclic_prime_power(p, e);
    case GroupFamily::AbelianAlmostCyclic:
      return product(e > 1 ? AbelianType::cyclic_prime_power(p, e - 1) : AbelianType{},
                     AbelianType::cyclic_prime_power(p, 1));
    default:
      throw InputError(to_string() + " is not abelian");
  }
}

AbelianType NamedGroup::center() const {
  if (is_abelian()) return abelian_type();
  if (family_ == GroupFamily::Modular) {
    // Z(Mod_{2^n}) = <a^2>, cyclic of order 2^(n-2)
    return AbelianType::cyclic(order_ / 4);
  }
  return AbelianType::cyclic(2);
}

std::vector<std::uint64_t> NamedGroup::cyclic_maximal_abelian_orders() const {
  const std::uint64_t n = order_ / 2;
  switch (family_) {
    case GroupFamily::Dihedral:
      return {n};
    case GroupFamily::GeneralizedQuaternion:
    case GroupFamily::Semidihedral:
      if (n == 4) return {4};
      return {n, 4};
    case GroupFamily::Modular:
      return {n};
    default:
      return {};
  }
}

std::string NamedGroup::to_string() const {
  switch (family_) {
    case GroupFamily::Dihedral: return "D" + std::to_string(order_);
    case GroupFamily::GeneralizedQuaternion: return "Q" + std::to_string(order_);
    case GroupFamily::Semidihedral: return "SD" + std::to_string(order_);
    case GroupFamily::Modular: return "Mod" + std::to_string(order_);
    default: return abelian_type().to_string();
  }
}

GroupSpec parse_group(std::string_view text) {
  const std::string s = lower(text);
  if (s.empty()) throw InputError("empty group expression");

  auto named = [&](std::string_view prefix, GroupFamily family) -> std::optional<NamedGroup> {
    if (s.size() > prefix.size() && s.compare(0, prefix.size(), prefix) == 0 &&
        std::all_of(s.begin() + static_cast<std::ptrdiff_t>(prefix.size()), s.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return NamedGroup(family, parse_uint(std::string_view(s).substr(prefix.size()), text));
    }
    return std::nullopt;
  };
  if (auto g = named("sd", GroupFamily::Semidihedral)) return *g;
  if (auto g = named("mod", GroupFamily::Modular)) return *g;
  if (auto g = named("d", GroupFamily::Dihedral)) return *g;
  if (auto g = named("q", GroupFamily::GeneralizedQuaternion)) return *g;

  std::vector<PrimePowerFactor> factors;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('x', start);
    if (end == std::string::npos) end = s.size();
    std::string_view tok = std::string_view(s).substr(start, end - start);
    if (tok.empty()) throw InputError("empty factor in group '" + std::string(text) + "'");
    if (tok == "1") {
      // trivial factor
    } else if (tok.front() == 'c') {
      std::string_view body = tok.substr(1);
      std::uint64_t count = 1;
      if (auto caret = body.find('^'); caret != std::string_view::npos) {
        count = parse_uint(body.substr(caret + 1), text);
        body = body.substr(0, caret);
        if (count > kMaxParsedMultiplicity) {
          throw InputError("factor multiplicity too large in '" + std::string(text) + "'");
        }
      }
      std::uint64_t order = parse_uint(body, text);
      if (order == 0) throw InputError("C0 is not a finite cyclic group");
      for (auto [p, e] : nt::factorize(order)) factors.push_back({p, e, count});
    } else {
      throw InputError("unrecognized factor '" + std::string(tok) + "' in group '" +
                       std::string(text) + "'");
    }
    start = end + 1;
  }
  return AbelianType::from_factors(std::move(factors));
}

AbelianType parse_abelian(std::string_view text) {
  GroupSpec g = parse_group(text);
  if (auto* a = std::get_if<AbelianType>(&g)) return *a;
  throw InputError("expected an abelian group, got " + std::string(text));
}

std::string to_string(const GroupSpec& g) {
  return std::visit([](const auto& x) { return x.to_string(); }, g);
}

}  // namespace unitforge
