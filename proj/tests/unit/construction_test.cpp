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

#include "oracles.hpp"
#include "unitforge/construction.hpp"
#include "unitforge/error.hpp"
#include "unitforge/units.hpp"

namespace {

using namespace unitforge;

TEST(Construction, RoundTripText) {
  for (const char* text :
       {"Z[8]", "GF[2,3]", "GR[2,3,2]", "F2[x,y]/(x^5,y^4)", "F2[x,y]/(x^5,y^4,x^3+y^2)", "F2[D8]",
        "U3[F2]", "M(Z[8], C4xC2)", "Z[i]/(1+i)^4", "Z", "Z[i]", "L", "GF[2,1] * GF[2,3]",
        "M(Z, C16)", "F3[C3]", "quot(Z[12]; 4)"}) {
    const ExprPtr e = parse_ring(text);
    EXPECT_EQ(to_string(parse_ring(to_string(e))), to_string(e)) << text;
  }
}

TEST(Construction, ParseErrors) {
  for (const char* text : {"", "Z[", "F2[x]/(", "M(Z[8])", "Q[3]", "Z[8] *"}) {
    EXPECT_THROW(parse_ring(text), InputError) << text;
  }
  for (const char* text : {"GF[4,1]", "GF[2,0]", "Z[0]", "M(Z[4], C8)"}) {
    EXPECT_THROW(build_ring(*parse_ring(text)), InputError) << text;
  }
}

TEST(Construction, Characteristics) {
  EXPECT_EQ(characteristic_of(*parse_ring("Z[8]")), 8u);
  EXPECT_EQ(characteristic_of(*parse_ring("GR[2,3,2]")), 8u);
  EXPECT_EQ(characteristic_of(*parse_ring("GF[2,1] * GF[3,1]")), 6u);
  EXPECT_EQ(characteristic_of(*parse_ring("M(Z, C4)")), 0u);
  EXPECT_EQ(characteristic_of(*parse_ring("Z[i]/(1+i)^5")), 8u);
  EXPECT_FALSE(is_finite(*parse_ring("M(Z, C4)")));
  EXPECT_TRUE(is_finite(*parse_ring("M(Z[8], C4)")));
}

TEST(Construction, LeastIrreducible) {
  EXPECT_EQ(least_irreducible(3, 2), (std::vector<std::uint64_t>{1, 0}));
  EXPECT_EQ(least_irreducible(2, 3), (std::vector<std::uint64_t>{1, 1, 0}));
  EXPECT_EQ(least_irreducible(2, 2), (std::vector<std::uint64_t>{1, 1}));
}

TEST(Construction, FieldsHaveCyclicUnits) {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 1}, {2, 4}, {3, 2}, {5, 2}, {7, 1}, {3, 3}}) {
    const Ring r = build_ring(*make_gf(p, k));
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    EXPECT_EQ(r.order(), q);
    EXPECT_EQ(oracle::ring_unit_type(r), AbelianType::cyclic(q - 1));
  }
}

TEST(Construction, SmallRingsAgreeWithOracle) {
  for (const char* text : {"Z[12]", "Z[16]", "GR[2,2,2]", "GR[3,2,1]", "F2[x,y]/(x^2,y^2)",
                           "F3[x]/(x^3)", "M(Z[8], C4xC2)", "M(GF[3,1], C3)", "F2[C4]",
                           "Z[i]/(1+i)^5", "quot(F2[x]/(x^5); x^3)", "F2[x,y]/(x^3,y^3,xy)"}) {
    const Ring r = build_ring(*parse_ring(text));
    EXPECT_EQ(unit_group_report(r).abelian_type, oracle::ring_unit_type(r)) << text;
  }
}

TEST(Construction, TriangularNeedsModuleStructure) {
  EXPECT_THROW(build_ring(*parse_ring("M(GF[2,2], C2)")), InputError);
}

TEST(Construction, CapIsChecked) {
  Limits tiny;
  tiny.ring_order_cap = 64;
  EXPECT_THROW(build_ring(*parse_ring("F2[x]/(x^7)"), tiny), CapExceeded);
  EXPECT_NO_THROW(build_ring(*parse_ring("F2[x]/(x^6)"), tiny));
}

TEST(Construction, SymbolsEvaluate) {
  const Ring r = build_ring(*parse_ring("F2[x,y]/(x^5,y^4)"));
  EXPECT_TRUE(r.is_zero(parse_element(r, "x^5")));
  EXPECT_FALSE(r.is_zero(parse_element(r, "x^4*y^3")));
  EXPECT_EQ(parse_element(r, "x^3+y^2"), r.add(parse_element(r, "x^3"), parse_element(r, "y^2")));
  EXPECT_THROW(parse_element(r, "z"), InputError);
}

TEST(Construction, SymbolicRingsDoNotEvaluate) {
  EXPECT_THROW(build_ring(*parse_ring("Z[i]")), InputError);
  EXPECT_THROW(build_ring(*parse_ring("L")), InputError);
}

}  // namespace
