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
#include <optional>
#include <utility>
#include <vector>

// Small 64-bit number theory used across the library.
namespace unitforge::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
// Throws InputError on overflow.
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// base^exp, or nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
// factorize(1) is empty; factorize(0) throws.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// If n = p^e for a prime p and e >= 1, returns (p, e).
std::optional<std::pair<std::uint64_t, int>> as_prime_power(std::uint64_t n);

// Exact log base p of n when n is a power of p.
std::optional<int> exact_log(std::uint64_t n, std::uint64_t p);

bool is_power_of_two(std::uint64_t n);

// Modular inverse of a mod m; nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

// Euler's totient.
std::uint64_t totient(std::uint64_t n);

}  // namespace unitforge::nt
