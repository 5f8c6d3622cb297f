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

#include "unitforge/error.hpp"
#include "unitforge/json_io.hpp"
#include "unitforge/verify.hpp"

namespace {

using namespace unitforge;

void expect_all_pass(const SuiteReport& r) {
  EXPECT_TRUE(r.pass) << r.suite;
  for (const auto& c : r.cases) {
    EXPECT_TRUE(c.pass) << c.desc << ": expected " << c.expected << ", observed " << c.observed;
  }
}

TEST(Verify, AnFormula) {
  const SuiteReport r2 = suite_an_formula(2, 12);
  EXPECT_EQ(r2.cases.size(), 12u);
  expect_all_pass(r2);
  const SuiteReport r3 = suite_an_formula(3, 7);
  EXPECT_EQ(r3.cases.size(), 7u);
  expect_all_pass(r3);
  const SuiteReport r1 = suite_an_formula(2, 1);
  ASSERT_EQ(r1.cases.size(), 1u);
  EXPECT_EQ(r1.cases[0].observed, "1");
  EXPECT_THROW(suite_an_formula(4, 3), InputError);
}

TEST(Verify, C48HasTwoNegativeAndEightPositiveFacts) {
  const SuiteReport r = suite_c48();
  expect_all_pass(r);
  ASSERT_EQ(r.cases.size(), 10u);
  int no = 0;
  int yes = 0;
  for (const auto& c : r.cases) (c.observed == "no" ? no : yes) += 1;
  EXPECT_EQ(no, 2);
  EXPECT_EQ(yes, 8);
}

TEST(Verify, PowerDown) {
  const SuiteReport r = suite_power_down(default_power_down_rings(), 2);
  expect_all_pass(r);
  const SuiteReport a5 = suite_power_down({make_trunc_poly(2, {5})}, 1);
  ASSERT_EQ(a5.cases.size(), 1u);
  EXPECT_EQ(a5.cases[0].observed, "C4");
  EXPECT_THROW(suite_power_down({make_zn(4)}, 1), InputError);
}

TEST(Verify, MatrixTrick) {
  const auto cases = default_matrix_trick_cases();
  EXPECT_EQ(cases.size(), 10u);
  const SuiteReport r = suite_matrix_trick(cases);
  expect_all_pass(r);
  EXPECT_EQ(r.cases[0].observed, "C4xC2^3");
  EXPECT_EQ(r.cases[1].observed, "8");
}

TEST(Verify, GroupAlgebra) {
  expect_all_pass(suite_group_algebra(2, default_group_algebra_groups(2)));
  const SuiteReport r3 = suite_group_algebra(3, {parse_group("C3")});
  ASSERT_EQ(r3.cases.size(), 1u);
  EXPECT_EQ(r3.cases[0].observed, "18");
}

TEST(Verify, WitnessCatalog) { expect_all_pass(suite_witness_catalog()); }

TEST(Verify, J0) {
  const SuiteReport r = suite_j0(default_j0_cases());
  expect_all_pass(r);
  EXPECT_EQ(r.vacuous_count(), 1u);
}

TEST(Verify, SuitesAreDeterministic) {
  for (const auto& name : {"c48", "j0", "matrix_trick"}) {
    EXPECT_EQ(suite_to_json(run_suite(name), false), suite_to_json(run_suite(name), false));
  }
  EXPECT_THROW(run_suite("nope"), InputError);
}

TEST(Verify, Search) {
  const auto a5 = search_witness(parse_abelian("C8xC2"), {5, 2});
  ASSERT_TRUE(a5);
  EXPECT_EQ(to_string(*a5), "F2[x]/(x^5)");
  const auto c4 = search_witness(parse_abelian("C4"), {3, 2});
  ASSERT_TRUE(c4);
  EXPECT_EQ(to_string(*c4), "F2[x]/(x^3)");
  EXPECT_FALSE(search_witness(parse_abelian("C8"), {10, 2}).has_value());
  const auto c44 = search_witness(parse_abelian("C4xC4"), {9, 1});
  ASSERT_TRUE(c44);
  EXPECT_EQ(to_string(*c44), "F2[x,y]/(x^3,y^3,xy)");
  EXPECT_THROW(search_witness(parse_abelian("C3"), {4, 1}), InputError);
}

}  // namespace
