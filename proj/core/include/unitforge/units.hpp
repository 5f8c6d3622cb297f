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
#include <map>
#include <optional>
#include <vector>

#include "unitforge/groups.hpp"
#include "unitforge/ring.hpp"

namespace unitforge {

struct UnitGroupReport {
  std::uint64_t order = 0;
  bool abelian = true;
  std::optional<AbelianType> abelian_type;
  // Element order -> number of units of that order.
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  // Only computed for nonabelian groups of order at most 4096.
  std::optional<std::uint64_t> center_order;
  std::optional<NamedGroup> identified;

  friend bool operator==(const UnitGroupReport&, const UnitGroupReport&) = default;
};

// Indicator over element indices: mask[i] != 0 iff decode(i) is a unit.
// Runs on `threads` workers (0 picks the hardware concurrency).
std::vector<std::uint8_t> unit_mask(const Ring& r, unsigned threads = 0);

// Indices of the units, ascending.
std::vector<Index> enumerate_units(const Ring& r, unsigned threads = 0);

UnitGroupReport unit_group_report(const Ring& r, unsigned threads = 0);

// Element order of a unit, given the order of the unit group.
std::uint64_t element_order(const Ring& r, Index x, std::uint64_t group_order);

// Abelian invariants from the histogram of element orders.
AbelianType abelian_type_from_histogram(const std::map<std::uint64_t, std::uint64_t>& hist);

// Lookup of a nonabelian group of order 8 or 16 by its order statistics.
std::optional<NamedGroup> identify_small(std::uint64_t order,
                                         const std::map<std::uint64_t, std::uint64_t>& hist,
                                         std::uint64_t center_order);

enum class RadicalMethod {
  Automatic,   // nilradical for commutative rings, quasi-regularity otherwise
  Definition,  // x with 1 + a x a unit for every a, for any ring
};

IdealSubspace jacobson_radical(const Ring& r, RadicalMethod method = RadicalMethod::Automatic);

}  // namespace unitforge
