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
#include <functional>
#include <random>

#include "unitforge/groups.hpp"
#include "unitforge/ring.hpp"

// Slow reference computations kept independent of the library algorithms.
namespace unitforge::oracle {

std::uint64_t totient(std::uint64_t n);
bool is_prime(std::uint64_t n);

// Abelian type from the counts #{x : x^(p^k) = 1} for every prime p dividing
// `order`; count(p, k) must return that number.
AbelianType type_from_counts(std::uint64_t order,
                             const std::function<std::uint64_t(std::uint64_t, int)>& count);

AbelianType zn_units(std::uint64_t n);

// Z[i]/(1+i)^n, computed on pairs (a, b) with ideal membership read off the
// 2-adic valuation of the norm.
AbelianType gaussian_quotient_units(int n);

// (F_p[x]/(x^n))^x by polynomial arithmetic on coefficient vectors.
AbelianType truncated_poly_units(std::uint64_t p, int n);

// Units found by searching for a two-sided inverse of every element.
std::vector<Index> ring_units(const Ring& r);
bool units_commute(const Ring& r, const std::vector<Index>& units);
// Requires commuting units.
AbelianType ring_unit_type(const Ring& r);

std::uint64_t element_order(const Ring& r, Index x);

AbelianType random_two_group(std::mt19937_64& rng, int max_rank, int max_exponent);

}  // namespace unitforge::oracle
