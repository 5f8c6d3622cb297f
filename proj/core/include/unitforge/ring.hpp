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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitforge/config.hpp"
#include "unitforge/subgroup.hpp"

namespace unitforge {

// A finite ring as structure constants over a mixed-radix additive basis.
struct RingPresentation {
  std::uint64_t characteristic = 0;
  std::vector<std::uint64_t> additive_orders;
  Element one;
  // mul[i][j] holds the coordinates of b_i * b_j.
  std::vector<std::vector<Element>> mul;
  bool commutative = false;
  // Named elements (polynomial variables and the like). Not part of the
  // serialized presentation.
  std::vector<std::pair<std::string, Element>> symbols;
};

struct ValidationReport {
  bool ok = true;
  // Short failure category, e.g. "unit axiom" or "associativity".
  std::string failure;
  std::string detail;
};

// Exhaustive check of every presentation invariant over basis triples.
ValidationReport validate(const RingPresentation& r, const Limits& limits = {});

// Dense element index in [0, |R|).
using Index = std::uint64_t;

// A validated, immutable finite ring. Cheap to copy.
class Ring {
 public:
  // Throws CapExceeded when the order is over the cap and InputError when
  // any other invariant fails.
  explicit Ring(RingPresentation presentation, const Limits& limits = {});

  const RingPresentation& presentation() const noexcept;
  const Limits& limits() const noexcept;
  std::uint64_t order() const noexcept;
  std::size_t dimension() const noexcept;
  std::uint64_t characteristic() const noexcept;
  bool is_commutative() const noexcept;
  const std::vector<std::uint64_t>& radices() const noexcept;
  // True when every additive order is 2, so elements are bit masks.
  bool is_binary() const noexcept;

  Element zero() const;
  Element one() const;
  Element basis(std::size_t i) const;
  std::optional<Element> symbol(std::string_view name) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(const Element& a, std::uint64_t k) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;
  bool is_zero(const Element& a) const;

  Index encode(const Element& a) const;
  Element decode(Index i) const;
  Index zero_index() const noexcept { return 0; }
  Index one_index() const noexcept;
  Index add_index(Index a, Index b) const;
  Index mul_index(Index a, Index b) const;
  Index pow_index(Index a, std::uint64_t e) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// A two-sided ideal, stored as its additive subgroup.
class IdealSubspace {
 public:
  IdealSubspace(Ring ring, AdditiveSubgroup group, std::vector<Element> generating_set);

  const Ring& ring() const noexcept { return ring_; }
  const AdditiveSubgroup& subgroup() const noexcept { return group_; }
  // Generators the ideal was closed from.
  const std::vector<Element>& generating_set() const noexcept { return generating_set_; }
  // Additive generators of the closed ideal.
  const std::vector<Element>& basis() const noexcept { return group_.generators(); }

  bool contains(const Element& x) const { return group_.contains(x); }
  std::uint64_t order() const { return group_.order(); }
  bool is_zero() const { return order() == 1; }
  bool is_whole_ring() const { return order() == ring_.order(); }
  std::vector<Element> elements() const;

 private:
  Ring ring_;
  AdditiveSubgroup group_;
  std::vector<Element> generating_set_;
};

// Smallest two-sided ideal containing the generators, by fixpoint over
// left and right multiplication with basis elements.
IdealSubspace ideal_closure(const Ring& r, std::span<const Element> generators);

// R/I on coset representatives. Throws InputError when I is the whole ring.
Ring quotient(const Ring& r, const IdealSubspace& ideal);

// {x : x^(2^k) = 0} in a commutative ring of characteristic 2.
IdealSubspace frobenius_kernel(const Ring& r, unsigned k);

}  // namespace unitforge
