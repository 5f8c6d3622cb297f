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

#pragma once

#include <compare>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace unitforge {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxFactorExponent = 64;

// One cyclic factor of order prime^exponent, repeated `count` times.
struct PrimePowerFactor {
  std::uint64_t prime = 2;
  int exponent = 1;
  std::uint64_t count = 1;

  friend bool operator==(const PrimePowerFactor&, const PrimePowerFactor&) = default;
};

// Isomorphism type of a finite abelian group: the multiset of its
// prime-power cyclic factors. Factors are kept merged and sorted by
// (prime, exponent) descending, so equality of values is isomorphism.
class AbelianType {
 public:
  // The trivial group.
  AbelianType() = default;

  // Builds from (prime, exponent, count) triples in any order. Throws
  // InputError on a non-prime, an exponent outside [1, 64] or a zero count.
  static AbelianType from_factors(std::vector<PrimePowerFactor> factors);

  static AbelianType cyclic(std::uint64_t order);
  static AbelianType cyclic_prime_power(std::uint64_t prime, int exponent,
                                        std::uint64_t count = 1);

  const std::vector<PrimePowerFactor>& factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return factors_.empty(); }
  std::uint64_t rank() const noexcept;
  BigInt order() const;
  BigInt exponent() const;

  // Distinct primes dividing the order, descending.
  std::vector<std::uint64_t> primes() const;
  // True for the trivial group too.
  bool is_p_group(std::uint64_t p) const noexcept;
  bool is_elementary_abelian() const noexcept;

  // Number of copies of C_{p^e}.
  std::uint64_t multiplicity(std::uint64_t p, int e) const noexcept;
  // Largest e with C_{p^e} present, 0 if none.
  int max_exponent(std::uint64_t p) const noexcept;
  // Exponents of the p-part sorted descending, one entry per factor.
  std::vector<int> exponents(std::uint64_t p) const;

  // Compact text form: "C8xC2", "C4^2xC2", "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianType&, const AbelianType&) = default;
  friend std::strong_ordering operator<=>(const AbelianType& a, const AbelianType& b);

 private:
  std::vector<PrimePowerFactor> factors_;
};

// Splits each order into its prime-power parts. Order-1 entries vanish.
AbelianType canonicalize(std::span<const std::uint64_t> orders);
AbelianType product(const AbelianType& a, const AbelianType& b);
// Image of x -> x^(2^k): each C_{2^e} becomes C_{2^max(e-k,0)}.
// Throws InputError when g is not a 2-group.
AbelianType power_down(const AbelianType& g, unsigned k);
std::uint64_t rank(const AbelianType& g);
BigInt exponent(const AbelianType& g);
// Number of x with x^n = 1, i.e. the product of gcd(|C|, n) over factors.
BigInt count_order_dividing(const AbelianType& g, const BigInt& n);
bool has_cyclic_summand(const AbelianType& g, std::uint64_t p, int e);

// Whether h is isomorphic to a subgroup of g (decided per prime on sorted
// exponent lists).
bool has_subgroup(const AbelianType& g, const AbelianType& h);
// g with the factors of h removed, when h's factors form a sub-multiset.
std::optional<AbelianType> remove_factors(const AbelianType& g, const AbelianType& h);

// Nonabelian (and degenerate abelian) almost cyclic families.
enum class GroupFamily {
  Dihedral,
  GeneralizedQuaternion,
  Semidihedral,
  Modular,
  AbelianAlmostCyclic,
  Cyclic,
};

std::string_view family_name(GroupFamily f);

class NamedGroup {
 public:
  // Throws InputError when the order is not a prime power or is below the
  // family's minimum (8 for D and Q, 16 for SD and Mod, and a power of 2 for
  // all four nonabelian families).
  NamedGroup(GroupFamily family, std::uint64_t order);

  GroupFamily family() const noexcept { return family_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_abelian() const noexcept;

  // Only for the abelian families.
  AbelianType abelian_type() const;
  AbelianType center() const;
  // Orders of the cyclic maximal abelian subgroups (nonabelian families).
  std::vector<std::uint64_t> cyclic_maximal_abelian_orders() const;

  std::string to_string() const;

  friend bool operator==(const NamedGroup&, const NamedGroup&) = default;

 private:
  GroupFamily family_;
  std::uint64_t order_;
};

using GroupSpec = std::variant<AbelianType, NamedGroup>;

// Parses "C8xC2", "C4^2xC2", "1", "D8", "Q16", "SD16", "Mod16".
// Case-insensitive. Named nonabelian groups stand alone.
GroupSpec parse_group(std::string_view text);
AbelianType parse_abelian(std::string_view text);
std::string to_string(const GroupSpec& g);

}  // namespace unitforge
