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
#include <string>
#include <utility>
#include <vector>

#include "unitforge/config.hpp"
#include "unitforge/construction.hpp"
#include "unitforge/groups.hpp"

namespace unitforge {

struct SuiteCase {
  std::string desc;
  std::string expected;
  std::string observed;
  bool pass = false;

  friend bool operator==(const SuiteCase&, const SuiteCase&) = default;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  bool pass = true;
  std::uint64_t ms = 0;

  // Number of cases whose observation starts with the vacuous marker.
  std::size_t vacuous_count() const;
};

// Prefix of `observed` for cases whose precondition does not hold.
inline constexpr std::string_view kVacuous = "vacuous";

struct MatrixTrickCase {
  ExprPtr base;
  AbelianType module;
};

// Brute-force units of F_p[x]/(x^n) against the closed form, n = 1..n_max.
SuiteReport suite_an_formula(std::uint64_t p, int n_max, const Limits& limits = {});

// Ideal membership facts excluding C8xC4 and C8xC8 in characteristic 2.
SuiteReport suite_c48();

// Units of R / frobenius_kernel(R, k) against power_down(R^x, k).
SuiteReport suite_power_down(const std::vector<ExprPtr>& rings, unsigned k_max,
                             const Limits& limits = {});

// Units and characteristic of M(R, H) against R^x x H.
SuiteReport suite_matrix_trick(const std::vector<MatrixTrickCase>& cases,
                               const Limits& limits = {});

// Unit count of F_p[G] against (p - 1) p^(|G| - 1); D8 and Q8 must be nonabelian.
SuiteReport suite_group_algebra(std::uint64_t p, const std::vector<GroupSpec>& groups,
                                const Limits& limits = {});

// Every finite witness emitted by the classifier, the Gaussian quotients for
// n <= 8 and the Galois ring grid.
SuiteReport suite_witness_catalog(const Limits& limits = {});

// Semisimplicity and field-decomposition bookkeeping for rings of prime
// characteristic p with |R^x| prime to p.
SuiteReport suite_j0(const std::vector<ExprPtr>& cases, const Limits& limits = {});

std::vector<ExprPtr> default_power_down_rings();
std::vector<MatrixTrickCase> default_matrix_trick_cases();
std::vector<GroupSpec> default_group_algebra_groups(std::uint64_t p);
std::vector<ExprPtr> default_j0_cases();

struct SearchOptions {
  int max_dim = 8;
  int max_generators = 2;
};

// Looks for a quotient of a truncated polynomial F_2-algebra whose unit
// group is `target`. The result has been rebuilt and checked.
std::optional<ExprPtr> search_witness(const AbelianType& target, const SearchOptions& options = {},
                                      const Limits& limits = {});

// Runs a suite by name ("an_formula", "c48", "power_down", "matrix_trick",
// "group_algebra", "witness_catalog", "j0") with its default parameters.
SuiteReport run_suite(std::string_view name, const Limits& limits = {});
const std::vector<std::string>& suite_names();

}  // namespace unitforge
