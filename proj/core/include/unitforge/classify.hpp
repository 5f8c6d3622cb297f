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
#include <string_view>
#include <vector>

#include "unitforge/config.hpp"
#include "unitforge/construction.hpp"
#include "unitforge/groups.hpp"

namespace unitforge {

enum class Status { Realizable, NotRealizable, Unknown };
std::string_view status_name(Status s);

// Which characteristics a query ranges over.
struct CharSpec {
  enum class Kind { Any, Zero, Equals, Odd, TwoPower };
  Kind kind = Kind::Any;
  std::uint64_t n = 0;  // Equals: the characteristic; TwoPower: the exponent

  static CharSpec any() { return {Kind::Any, 0}; }
  static CharSpec zero() { return {Kind::Zero, 0}; }
  static CharSpec equals(std::uint64_t c) { return {Kind::Equals, c}; }
  static CharSpec odd() { return {Kind::Odd, 0}; }
  static CharSpec two_power(std::uint64_t e) { return {Kind::TwoPower, e}; }

  // "any", "0", "odd", "2^k" or a positive integer.
  static CharSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const CharSpec&, const CharSpec&) = default;
};

enum class RuleId {
  OddCharForm,
  OddCharTrivial,
  CharInadmissible,
  FermatComponent,
  Char2Rank12,
  Char2RankLimit,
  Char2OrderBound,
  Char2PowerDown,
  Char2ProductCover,
  Char2Open,
  Char2nMatrix,
  Char2nGaussian,
  Char2nSubgroup,
  Char2nOpen,
  Char0Summand,
  Char0C2Module,
  Char0GaussianModule,
  Char0Open,
  OddPMersenne,
  AlmostCyclicList,
  PeriodicCohomologyList,
  OrderP3List,
  NonabelianCenter,
  NonabelianCyclicMaximal,
  NonabelianIndecomposable,
  NonabelianOddChar,
  NonabelianOpen,
  AnyCombined,
};

// Stable identifier such as "CHAR0_SUMMAND".
std::string_view rule_name(RuleId r);
// The mathematical statement the rule rests on.
std::string_view rule_citation(RuleId r);
const std::vector<RuleId>& all_rules();

struct Verdict {
  Status status = Status::Unknown;
  CharSpec spec;
  ExprPtr witness;                     // set iff Realizable
  std::uint64_t witness_char = 0;      // characteristic of the witness
  RuleId rule = RuleId::AnyCombined;
  std::string notes;

  // "char" field: the witness characteristic when realizable, else the requested CharSpec.
  std::string char_text() const;
};

struct NecessaryCheck {
  bool pass = true;
  std::optional<RuleId> rule;
  std::string detail;
};

// Conditions every realizable nonabelian 2-group satisfies: a cyclic center
// and every cyclic maximal abelian subgroup have order at most 4.
NecessaryCheck nonabelian_necessary(const AbelianType& center,
                                    const std::vector<std::uint64_t>& cyclic_maximal_orders);

Verdict classify_odd_char(const AbelianType& g);
Verdict classify_char2(const AbelianType& g);
Verdict classify_char_2n(const AbelianType& g, unsigned n);
Verdict classify_char0(const AbelianType& g);
Verdict classify_odd_p(const AbelianType& g, std::uint64_t p);
Verdict classify_almost_cyclic(const GroupSpec& g);
Verdict classify_periodic_cohomology(const GroupSpec& g);
Verdict classify_order_p3(const GroupSpec& g);
Verdict classify(const GroupSpec& g, const CharSpec& spec);

bool is_almost_cyclic(const GroupSpec& g);

// Unit group of a construction from closed forms, when one applies.
std::optional<GroupSpec> formula_unit_group(const ConstructionExpr& e);

// Checks a Realizable verdict: the witness unit group, by brute force when
// the ring is finite and within the cap, otherwise by formula. Returns an
// empty string on success and a reason on failure.
std::string self_verify(const Verdict& v, const GroupSpec& g, const Limits& limits = {});

struct CatalogEntry {
  AbelianType units;
  ExprPtr ring;
};
// Rings of characteristic 2 used for product covers: F_2[x]/(x^n) for
// 2 <= n <= 32 and F_2[x,y]/(x^a, y^b) for 2 <= b <= a, ab <= 12.
const std::vector<CatalogEntry>& char2_catalog();

}  // namespace unitforge
