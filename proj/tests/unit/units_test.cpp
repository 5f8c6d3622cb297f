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
#include "unitforge/units.hpp"

namespace {

using namespace unitforge;

TEST(Units, MaskMatchesInverseSearch) {
  for (const char* text : {"Z[12]", "U3[F2]", "F2[Q8]", "GR[2,2,2]", "M(Z[4], C2)"}) {
    const Ring r = build_ring(*parse_ring(text));
    const auto expected = oracle::ring_units(r);
    EXPECT_EQ(enumerate_units(r), expected) << text;
    EXPECT_EQ(enumerate_units(r, 4), expected) << text;
  }
}

TEST(Units, UpperTriangularIsD8) {
  const UnitGroupReport rep = unit_group_report(build_ring(*parse_ring("U3[F2]")));
  EXPECT_EQ(rep.order, 8u);
  EXPECT_FALSE(rep.abelian);
  EXPECT_EQ(rep.order_histogram.at(4), 2u);
  EXPECT_EQ(rep.order_histogram.at(2), 5u);
  EXPECT_EQ(rep.center_order, 2u);
  EXPECT_EQ(rep.identified, NamedGroup(GroupFamily::Dihedral, 8));
}

TEST(Units, GroupAlgebrasOfOrderEight) {
  for (const char* text : {"F2[D8]", "F2[Q8]"}) {
    const UnitGroupReport rep = unit_group_report(build_ring(*parse_ring(text)));
    EXPECT_EQ(rep.order, 128u) << text;
    EXPECT_FALSE(rep.abelian) << text;
  }
}

TEST(Units, ElementOrder) {
  const Ring r = build_ring(*parse_ring("GF[3,2]"));
  for (Index u : enumerate_units(r)) EXPECT_EQ(element_order(r, u, 8), oracle::element_order(r, u));
}

TEST(Units, HistogramToType) {
  EXPECT_EQ(abelian_type_from_histogram({{1, 1}, {2, 3}, {4, 4}}), parse_abelian("C4xC2"));
  EXPECT_EQ(abelian_type_from_histogram({{1, 1}, {2, 1}, {4, 2}, {8, 4}}), parse_abelian("C8"));
  EXPECT_EQ(abelian_type_from_histogram({{1, 1}, {3, 2}, {2, 1}, {6, 2}}), parse_abelian("C6"));
}

TEST(Units, IdentifySmall) {
  EXPECT_EQ(identify_small(8, {{1, 1}, {2, 1}, {4, 6}}, 2), NamedGroup(GroupFamily::GeneralizedQuaternion, 8));
  EXPECT_EQ(identify_small(16, {{1, 1}, {2, 3}, {4, 4}, {8, 8}}, 4), NamedGroup(GroupFamily::Modular, 16));
  EXPECT_EQ(identify_small(16, {{1, 1}, {2, 5}, {4, 6}, {8, 4}}, 2), NamedGroup(GroupFamily::Semidihedral, 16));
  EXPECT_FALSE(identify_small(32, {{1, 1}, {2, 31}}, 2).has_value());
}

TEST(Units, JacobsonRadical) {
  EXPECT_EQ(jacobson_radical(build_ring(*parse_ring("F2[x]/(x^5)"))).order(), 16u);
  EXPECT_EQ(jacobson_radical(build_ring(*parse_ring("GF[2,1] * GF[2,3]"))).order(), 1u);
  EXPECT_EQ(jacobson_radical(build_ring(*parse_ring("Z[12]"))).order(), 2u);
  const Ring u3 = build_ring(*parse_ring("U3[F2]"));
  EXPECT_EQ(jacobson_radical(u3).order(), 8u);
  EXPECT_EQ(jacobson_radical(u3, RadicalMethod::Definition).order(), 8u);
  const Ring d8 = build_ring(*parse_ring("F2[D8]"));
  EXPECT_EQ(jacobson_radical(d8).order(), 128u);
}

TEST(Units, RadicalMethodsAgree) {
  for (const char* text : {"Z[8]", "F3[x]/(x^3)", "GR[2,2,2]", "F2[C3]", "M(Z[4], C2)"}) {
    const Ring r = build_ring(*parse_ring(text));
    EXPECT_EQ(jacobson_radical(r).order(), jacobson_radical(r, RadicalMethod::Definition).order())
        << text;
  }
}

}  // namespace
