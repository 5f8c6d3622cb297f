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

#include "unitforge/config.hpp"
#include "unitforge/groups.hpp"

// Closed-form unit groups and number-theoretic predicates. Nothing here
// builds a ring.
namespace unitforge::formulas {

// Membership in the configured Fermat list. A value of the form 2^(2^k)+1
// beyond the list raises UnknownFermatCandidate instead of answering.
bool is_fermat_prime(std::uint64_t q, const FermatMersenneTable& table = {});

// Trial division; throws InputError above table.mersenne_bound.
bool is_mersenne_prime(std::uint64_t p, const FermatMersenneTable& table = {});

// n = 2^a * (product of distinct Fermat primes).
bool admissible_characteristic(std::uint64_t n, const FermatMersenneTable& table = {});

// Unit group of F_p[x]/(x^n), summing the ceiling formula term by term.
AbelianType truncated_poly_units(std::uint64_t p, std::uint64_t n);

// (Z/n)^x.
AbelianType zn_units(std::uint64_t n);

// Unit group of the Galois ring of characteristic p^n and degree lambda.
// Requires n >= 2.
AbelianType galois_ring_units(std::uint64_t p, int n, int lambda);

// (Z[i]/(1+i)^n)^x.
AbelianType gaussian_quotient_units(int n);

// Additive group of Z[i]/(1+i)^k.
AbelianType gaussian_module_additive(int k);

// (p-1) * p^(|G|-1) for a p-group G of the given order.
BigInt group_algebra_unit_count(std::uint64_t p, std::uint64_t group_order);

}  // namespace unitforge::formulas
