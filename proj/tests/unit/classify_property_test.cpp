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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "unitforge/classify.hpp"
#include "unitforge/formulas.hpp"
#include "unitforge/json_io.hpp"

namespace {

using namespace unitforge;

const std::vector<CharSpec>& specs() {
  static const std::vector<CharSpec> s = {CharSpec::equals(2), CharSpec::two_power(2),
                                          CharSpec::two_power(3), CharSpec::equals(3),
                                          CharSpec::equals(12), CharSpec::odd(),
                                          CharSpec::zero(), CharSpec::any()};
  return s;
}

TEST(ClassifyProperty, ProductClosure) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 150; ++i) {
    const AbelianType g = oracle::random_two_group(rng, 3, 4);
    const AbelianType h = oracle::random_two_group(rng, 3, 4);
    for (const CharSpec& c : specs()) {
      if (c.kind == CharSpec::Kind::Any || c.kind == CharSpec::Kind::Odd) continue;
      const Verdict vg = classify(g, c);
      const Verdict vh = classify(h, c);
      if (vg.status != Status::Realizable || vh.status != Status::Realizable) continue;
      EXPECT_NE(classify(product(g, h), c).status, Status::NotRealizable)
          << g.to_string() << " x " << h.to_string() << " in " << c.to_string();
    }
  }
}

TEST(ClassifyProperty, PowerDownConsistency) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const AbelianType g = oracle::random_two_group(rng, 6, 4);
    if (classify_char2(g).status != Status::Realizable) continue;
    for (unsigned k = 1; k <= 4; ++k) {
      EXPECT_NE(classify_char2(power_down(g, k)).status, Status::NotRealizable)
          << g.to_string() << " k=" << k;
    }
  }
}

TEST(ClassifyProperty, RealizableWitnessesSelfVerify) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 120; ++i) {
    const AbelianType g = oracle::random_two_group(rng, 4, 4);
    for (const CharSpec& c : specs()) {
      const Verdict v = classify(g, c);
      if (v.status == Status::Realizable) {
        EXPECT_EQ(self_verify(v, g), "") << g.to_string() << " in " << c.to_string();
      } else {
        EXPECT_FALSE(v.witness);
      }
    }
  }
}

TEST(ClassifyProperty, InadmissibleCharacteristicsExclude) {
  std::mt19937_64 rng(5);
  for (std::uint64_t n = 2; n <= 200; ++n) {
    if (formulas::admissible_characteristic(n)) continue;
    const AbelianType g = oracle::random_two_group(rng, 3, 4);
    EXPECT_EQ(classify(g, CharSpec::equals(n)).status, Status::NotRealizable) << n;
  }
}

TEST(ClassifyProperty, RankAtMostTwoIsExact) {
  const std::set<AbelianType> realizable = {
      AbelianType(),          parse_abelian("C2"),    parse_abelian("C4"),
      parse_abelian("C2xC2"), parse_abelian("C4xC2"), parse_abelian("C4xC4"),
      parse_abelian("C8xC2")};
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= a; ++b) {
      std::vector<PrimePowerFactor> f;
      if (a > 0) f.push_back({2, a, 1});
      if (b > 0) f.push_back({2, b, 1});
      const AbelianType g = AbelianType::from_factors(f);
      const Status expected = realizable.count(g) ? Status::Realizable : Status::NotRealizable;
      EXPECT_EQ(classify_char2(g).status, expected) << g.to_string();
    }
  }
}

TEST(ClassifyProperty, OpenCasesStayUnknown) {
  for (const char* g : {"C8xC8xC2", "C8xC4xC4", "C8xC8xC4", "C8xC8xC8"}) {
    EXPECT_EQ(classify_char2(parse_abelian(g)).status, Status::Unknown) << g;
  }
  EXPECT_EQ(classify_char0(parse_abelian("C4xC32")).status, Status::Unknown);
}

TEST(ClassifyProperty, Deterministic) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const AbelianType g = oracle::random_two_group(rng, 4, 5);
    for (const CharSpec& c : specs()) {
      EXPECT_EQ(verdict_to_json(classify(g, c)), verdict_to_json(classify(g, c)));
    }
  }
}

TEST(ClassifyProperty, RealizableGroupsMeetNecessaryBounds) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const AbelianType g = oracle::random_two_group(rng, 5, 5);
    if (g.is_trivial() || classify_char2(g).status != Status::Realizable) continue;
    const int r = g.max_exponent(2);
    int m = 0;
    for (int e : g.exponents(2)) m += e;
    EXPECT_LE(BigInt(1) << r, BigInt(4) * g.rank()) << g.to_string();
    if (r >= 2) EXPECT_LE((1 << (r - 2)) + r - 1, m) << g.to_string();
  }
}

}  // namespace
