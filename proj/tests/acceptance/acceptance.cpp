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

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "unitforge/classify.hpp"
#include "unitforge/construction.hpp"
#include "unitforge/formulas.hpp"
#include "unitforge/units.hpp"
#include "unitforge/verify.hpp"

namespace {

using namespace unitforge;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome from_suite(const SuiteReport& r) {
  Outcome o;
  for (const auto& c : r.cases) {
    if (!c.pass) o.fail(c.desc + ": expected " + c.expected + ", observed " + c.observed);
  }
  if (!r.pass) o.fail(r.suite + " reported failure");
  if (o.pass) o.detail = std::to_string(r.cases.size()) + " cases";
  return o;
}

Outcome an_oracle() {
  Outcome o;
  int checked = 0;
  for (auto [p, n_max] : {std::pair<std::uint64_t, int>{2, 12}, {3, 7}}) {
    for (int n = 1; n <= n_max; ++n) {
      const Ring r = build_ring(*make_trunc_poly(p, {n}));
      const AbelianType brute = oracle::ring_unit_type(r);
      const AbelianType formula = formulas::truncated_poly_units(p, n);
      if (brute != formula || brute != oracle::truncated_poly_units(p, n)) {
        o.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " + brute.to_string() +
               " vs " + formula.to_string());
      }
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " rings";
  return o;
}

Outcome an_rank() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    const std::uint64_t r = formulas::truncated_poly_units(2, n).rank();
    if (r != n / 2) o.fail("n=" + std::to_string(n) + " rank " + std::to_string(r));
  }
  if (o.pass) o.detail = "n=1..64";
  return o;
}

Outcome rank_two() {
  Outcome o;
  std::set<AbelianType> realizable = {AbelianType()};
  for (const char* t : {"C2", "C4", "C2xC2", "C4xC2", "C4xC4", "C8xC2"}) {
    realizable.insert(parse_abelian(t));
  }
  int checked = 0;
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= a; ++b) {
      std::vector<PrimePowerFactor> f;
      if (a > 0) f.push_back({2, a, 1});
      if (b > 0) f.push_back({2, b, 1});
      const AbelianType g = AbelianType::from_factors(f);
      const bool expect = realizable.count(g) > 0;
      const Status s = classify_char2(g).status;
      if (s != (expect ? Status::Realizable : Status::NotRealizable)) {
        o.fail(g.to_string() + " gave " + std::string(status_name(s)));
      }
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " types";
  return o;
}

Outcome admissibility() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const std::uint64_t phi = oracle::totient(n);
    const bool power_of_two = (phi & (phi - 1)) == 0;
    if (formulas::admissible_characteristic(n) != power_of_two) o.fail("n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=1..10000";
  return o;
}

Outcome witness_catalog() {
  Outcome o;
  auto expect_type = [&](const std::string& text, const std::string& want) {
    const Ring r = build_ring(*parse_ring(text));
    const AbelianType got = oracle::ring_unit_type(r);
    if (got.to_string() != want) o.fail(text + " gave " + got.to_string());
  };
  expect_type("GF[3,2]", "C8");
  expect_type("GR[2,2,2]", "C3xC2^2");

  const Ring u3 = build_ring(*make_upper_tri(2, 3));
  const UnitGroupReport ru = unit_group_report(u3);
  const auto units = oracle::ring_units(u3);
  int order_four = 0;
  for (Index x : units) order_four += oracle::element_order(u3, x) == 4 ? 1 : 0;
  if (ru.order != 8 || units.size() != 8 || order_four != 2 || ru.abelian ||
      !ru.identified || ru.identified->to_string() != "D8") {
    o.fail("U3[F2] is not D8");
  }

  for (const char* g : {"D8", "Q8"}) {
    const Ring r = build_ring(*make_group_algebra(2, parse_group(g)));
    const auto u = oracle::ring_units(r);
    if (u.size() != 128 || oracle::units_commute(r, u)) o.fail(std::string("F2[") + g + "]");
  }

  for (int n = 1; n <= 8; ++n) {
    const Ring r = build_ring(*make_gaussian_quotient(n));
    const AbelianType got = oracle::ring_unit_type(r);
    if (got != oracle::gaussian_quotient_units(n) || got != formulas::gaussian_quotient_units(n)) {
      o.fail("Gaussian quotient n=" + std::to_string(n) + " gave " + got.to_string());
    }
  }

  const Outcome suite = from_suite(suite_witness_catalog());
  if (!suite.pass) o.fail(suite.detail);
  if (o.pass) o.detail = "fixed witnesses and " + suite.detail;
  return o;
}

Outcome classifier_consistency() {
  Outcome o;
  std::mt19937_64 rng(500);
  const std::vector<CharSpec> specs = {CharSpec::equals(2), CharSpec::two_power(2),
                                       CharSpec::two_power(3), CharSpec::zero(),
                                       CharSpec::equals(12)};
  int realizable = 0;
  for (int i = 0; i < 500; ++i) {
    const AbelianType g = oracle::random_two_group(rng, 4, 4);
    const AbelianType h = oracle::random_two_group(rng, 4, 4);
    for (const CharSpec& c : specs) {
      const Verdict vg = classify(g, c);
      const Verdict vh = classify(h, c);
      for (const auto* v : {&vg, &vh}) {
        if (v->status != Status::Realizable) continue;
        ++realizable;
        const std::string err = self_verify(*v, v == &vg ? GroupSpec(g) : GroupSpec(h));
        if (!err.empty()) o.fail("self-verify " + to_string(v->witness) + ": " + err);
      }
      if (vg.status == Status::Realizable && vh.status == Status::Realizable &&
          classify(product(g, h), c).status == Status::NotRealizable) {
        o.fail("closure " + g.to_string() + " x " + h.to_string() + " in " + c.to_string());
      }
    }
    if (classify_char2(g).status == Status::Realizable) {
      for (unsigned k = 1; k <= 3; ++k) {
        if (classify_char2(power_down(g, k)).status == Status::NotRealizable) {
          o.fail("power-down " + g.to_string() + " k=" + std::to_string(k));
        }
      }
    }
  }
  for (const char* g : {"C8xC8xC2", "C8xC4xC4"}) {
    if (classify_char2(parse_abelian(g)).status != Status::Unknown) o.fail(std::string(g) + " decided");
  }
  if (classify_char0(parse_abelian("C4xC32")).status != Status::Unknown) o.fail("C4xC32 decided");
  if (o.pass) o.detail = "500 pairs, " + std::to_string(realizable) + " witnesses verified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"A_n oracle equivalence", an_oracle},
      {"A_n rank bound", an_rank},
      {"C8xC4 and C8xC8 ideal membership", [] { return from_suite(suite_c48()); }},
      {"rank at most two classification", rank_two},
      {"characteristic admissibility", admissibility},
      {"witness catalog", witness_catalog},
      {"matrix trick", [] { return from_suite(suite_matrix_trick(default_matrix_trick_cases())); }},
      {"power-down", [] { return from_suite(suite_power_down(default_power_down_rings(), 2)); }},
      {"semisimple unit groups", [] { return from_suite(suite_j0(default_j0_cases())); }},
      {"classifier consistency", classifier_consistency},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": "
              << o.detail << " (" << ms << " ms)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
