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

#include <set>

#include "unitforge/classify.hpp"
#include "unitforge/error.hpp"

namespace {

using namespace unitforge;

Verdict run(const char* group, const char* spec) {
  return classify(parse_group(group), CharSpec::parse(spec));
}

void expect_realizable(const Verdict& v, const std::string& witness) {
  ASSERT_EQ(v.status, Status::Realizable) << v.notes;
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(to_string(v.witness), witness);
}

TEST(CharSpec, ParseAndPrint) {
  EXPECT_EQ(CharSpec::parse("any"), CharSpec::any());
  EXPECT_EQ(CharSpec::parse("ODD"), CharSpec::odd());
  EXPECT_EQ(CharSpec::parse("0"), CharSpec::zero());
  EXPECT_EQ(CharSpec::parse("2^3"), CharSpec::two_power(3));
  EXPECT_EQ(CharSpec::parse("12"), CharSpec::equals(12));
  for (const char* s : {"2^3", "12", "odd", "any", "0"}) EXPECT_EQ(CharSpec::parse(s).to_string(), s);
  for (const char* s : {"", "1", "2^0", "2^x", "-3", "seven", "2^64"}) {
    EXPECT_THROW(CharSpec::parse(s), InputError) << s;
  }
}

TEST(Rules, NamesAndCitationsAreUnique) {
  std::set<std::string_view> names;
  for (RuleId r : all_rules()) {
    EXPECT_TRUE(names.insert(rule_name(r)).second);
    EXPECT_FALSE(rule_citation(r).empty());
  }
  EXPECT_EQ(rule_name(RuleId::Char0Summand), "CHAR0_SUMMAND");
}

TEST(ClassifyOddChar, Examples) {
  expect_realizable(classify_odd_char(parse_abelian("C8")), "GF[3,2]");
  expect_realizable(classify_odd_char(parse_abelian("C4")), "GF[5,1]");
  expect_realizable(classify_odd_char(parse_abelian("C16xC2")), "GF[17,1] * GF[3,1]");
  EXPECT_EQ(classify_odd_char(parse_abelian("C32")).status, Status::NotRealizable);
  EXPECT_EQ(classify_odd_char(parse_abelian("C2^32")).status, Status::Realizable);
  EXPECT_EQ(classify_odd_char(parse_abelian("C64xC2")).rule, RuleId::OddCharForm);
  const Verdict trivial = classify_odd_char(AbelianType());
  EXPECT_EQ(trivial.status, Status::NotRealizable);
  EXPECT_EQ(trivial.rule, RuleId::OddCharTrivial);
  EXPECT_THROW(classify_odd_char(parse_abelian("C3")), InputError);
}

TEST(ClassifyChar2, Examples) {
  expect_realizable(classify_char2(parse_abelian("C8xC2")), "F2[x]/(x^5)");
  EXPECT_EQ(classify_char2(parse_abelian("C16")).status, Status::NotRealizable);
  EXPECT_EQ(classify_char2(parse_abelian("C8xC8xC2")).status, Status::Unknown);
  EXPECT_EQ(classify_char2(parse_abelian("C8xC4xC4")).status, Status::Unknown);
  expect_realizable(classify_char2(AbelianType()), "GF[2,1]");
  EXPECT_THROW(classify_char2(parse_abelian("C9")), InputError);
}

TEST(ClassifyChar2, ExclusionRules) {
  EXPECT_EQ(classify_char2(parse_abelian("C8xC4")).rule, RuleId::Char2Rank12);
  EXPECT_EQ(classify_char2(parse_abelian("C64xC2^12")).rule, RuleId::Char2RankLimit);
  EXPECT_EQ(classify_char2(parse_abelian("C16xC2^4")).rule, RuleId::Char2PowerDown);
  const Verdict pd = classify_char2(parse_abelian("C16xC8xC2^2"));
  EXPECT_EQ(pd.status, Status::NotRealizable);
  EXPECT_EQ(pd.rule, RuleId::Char2PowerDown);
  EXPECT_EQ(classify_char2(parse_abelian("C16xC16xC2^2")).status, Status::NotRealizable);
}

TEST(ClassifyChar2, ProductCover) {
  const Verdict v = classify_char2(parse_abelian("C4^3"));
  ASSERT_EQ(v.status, Status::Realizable);
  EXPECT_EQ(v.rule, RuleId::Char2ProductCover);
  EXPECT_EQ(self_verify(v, parse_group("C4^3")), "");
}

TEST(ClassifyChar2n, Examples) {
  expect_realizable(classify_char_2n(parse_abelian("C2xC4xC2"), 4), "M(Z[16], C2)");
  const Verdict c8 = classify_char_2n(parse_abelian("C8"), 3);
  EXPECT_EQ(c8.status, Status::NotRealizable);
  EXPECT_EQ(c8.rule, RuleId::Char2nSubgroup);
  expect_realizable(classify_char_2n(parse_abelian("C4xC2"), 4), "Z[16]");
  expect_realizable(classify_char_2n(parse_abelian("C4xC4xC2"), 3), "Z[i]/(1+i)^6");
  EXPECT_THROW(classify_char_2n(parse_abelian("C2"), 1), InputError);
}

TEST(ClassifyChar0, Examples) {
  const Verdict c8 = classify_char0(parse_abelian("C8"));
  EXPECT_EQ(c8.status, Status::NotRealizable);
  EXPECT_EQ(c8.rule, RuleId::Char0Summand);
  expect_realizable(classify_char0(parse_abelian("C2xC16")), "M(Z, C16)");
  EXPECT_EQ(classify_char0(parse_abelian("C4xC32")).status, Status::Unknown);
  expect_realizable(classify_char0(parse_abelian("C4")), "Z[i]");
  expect_realizable(classify_char0(parse_abelian("C2")), "Z");
  const Verdict g = classify_char0(parse_abelian("C4xC8xC8xC8xC4"));
  ASSERT_EQ(g.status, Status::Realizable);
  EXPECT_EQ(g.rule, RuleId::Char0GaussianModule);
  EXPECT_EQ(self_verify(g, parse_group("C4xC8xC8xC8xC4")), "");
}

TEST(ClassifyOddP, Examples) {
  expect_realizable(classify_odd_p(parse_abelian("C7xC7"), 7), "GF[2,3] * GF[2,3]");
  EXPECT_EQ(classify_odd_p(parse_abelian("C5"), 5).status, Status::NotRealizable);
  EXPECT_EQ(classify_odd_p(parse_abelian("C9"), 3).status, Status::NotRealizable);
  EXPECT_THROW(classify_odd_p(parse_abelian("C4"), 2), InputError);
  EXPECT_THROW(classify_odd_p(parse_abelian("C5"), 3), InputError);
}

TEST(ClassifyAlmostCyclic, Examples) {
  EXPECT_EQ(classify_almost_cyclic(parse_group("Q16")).status, Status::NotRealizable);
  expect_realizable(classify_almost_cyclic(parse_group("D8")), "U3[F2]");
  expect_realizable(classify_almost_cyclic(parse_group("C2xC8")), "M(Z, C8)");
  expect_realizable(classify_almost_cyclic(parse_group("Q8")), "L");
  expect_realizable(classify_almost_cyclic(parse_group("C31xC31")), "GF[2,5] * GF[2,5]");
  EXPECT_EQ(classify_almost_cyclic(parse_group("SD16")).status, Status::NotRealizable);
  EXPECT_EQ(classify_almost_cyclic(parse_group("Mod32")).status, Status::NotRealizable);
  EXPECT_EQ(classify_almost_cyclic(parse_group("C9xC3")).status, Status::NotRealizable);
  EXPECT_THROW(classify_almost_cyclic(parse_group("C4xC4")), InputError);
  EXPECT_THROW(classify_almost_cyclic(parse_group("C2^3")), InputError);
}

TEST(ClassifyPeriodic, Examples) {
  expect_realizable(classify_periodic_cohomology(parse_group("Q8")), "L");
  expect_realizable(classify_periodic_cohomology(parse_group("C16")), "GF[17,1]");
  EXPECT_EQ(classify_periodic_cohomology(parse_group("C32")).status, Status::NotRealizable);
  expect_realizable(classify_periodic_cohomology(parse_group("C7")), "GF[2,3]");
  EXPECT_EQ(classify_periodic_cohomology(parse_group("Q32")).status, Status::NotRealizable);
  EXPECT_THROW(classify_periodic_cohomology(parse_group("D8")), InputError);
  EXPECT_THROW(classify_periodic_cohomology(parse_group("C2xC2")), InputError);
}

TEST(ClassifyOrderP3, Examples) {
  EXPECT_EQ(classify_order_p3(parse_group("C4xC2")).status, Status::Realizable);
  EXPECT_EQ(classify_order_p3(parse_group("C2xC2xC2")).status, Status::Realizable);
  EXPECT_EQ(classify_order_p3(parse_group("C27")).status, Status::NotRealizable);
  EXPECT_EQ(classify_order_p3(parse_group("C9xC3")).status, Status::NotRealizable);
  EXPECT_EQ(classify_order_p3(parse_group("C7^3")).status, Status::Realizable);
  EXPECT_EQ(classify_order_p3(parse_group("C5^3")).status, Status::NotRealizable);
  EXPECT_EQ(classify_order_p3(parse_group("D8")).status, Status::Realizable);
  EXPECT_EQ(classify_order_p3(parse_group("Q8")).status, Status::Realizable);
  EXPECT_THROW(classify_order_p3(parse_group("C16")), InputError);
}

TEST(NonabelianNecessary, Examples) {
  EXPECT_TRUE(nonabelian_necessary(parse_abelian("C2"), {4}).pass);
  const auto q16 = nonabelian_necessary(parse_abelian("C2"), {8});
  EXPECT_FALSE(q16.pass);
  EXPECT_EQ(q16.rule, RuleId::NonabelianCyclicMaximal);
  EXPECT_TRUE(nonabelian_necessary(parse_abelian("C4"), {4}).pass);
  const auto center = nonabelian_necessary(parse_abelian("C8"), {4});
  EXPECT_FALSE(center.pass);
  EXPECT_EQ(center.rule, RuleId::NonabelianCenter);
  EXPECT_TRUE(nonabelian_necessary(parse_abelian("C8xC2"), {4}).pass);
}

TEST(Classify, DispatcherExamples) {
  const Verdict c8 = run("C8", "any");
  ASSERT_EQ(c8.status, Status::Realizable);
  EXPECT_EQ(c8.witness_char, 3u);
  EXPECT_EQ(c8.char_text(), "3");
  expect_realizable(run("1", "2"), "GF[2,1]");
  EXPECT_EQ(run("C8", "2").status, Status::NotRealizable);
  EXPECT_EQ(run("C8", "0").rule, RuleId::Char0Summand);
  EXPECT_EQ(run("C2", "10").status, Status::NotRealizable);
  EXPECT_EQ(run("C2", "10").rule, RuleId::FermatComponent);
  EXPECT_EQ(run("C2", "7").rule, RuleId::CharInadmissible);
  EXPECT_EQ(run("C2xC2", "3").status, Status::Realizable);
  EXPECT_EQ(run("C4", "3").status, Status::NotRealizable);
  EXPECT_EQ(run("C4xC2xC2", "12").status, Status::Realizable);
  EXPECT_EQ(run("C2", "2^1").status, Status::Realizable);
  EXPECT_EQ(run("C7", "odd").status, Status::NotRealizable);
  EXPECT_THROW(run("C6", "any"), InputError);
  EXPECT_THROW(classify(parse_group("C2"), CharSpec::equals(1)), InputError);
}

TEST(Classify, NonabelianDispatch) {
  EXPECT_EQ(run("D8", "any").status, Status::Realizable);
  EXPECT_EQ(run("D8", "2").status, Status::Realizable);
  EXPECT_EQ(run("D8", "odd").rule, RuleId::NonabelianOddChar);
  EXPECT_EQ(run("Q8", "6").rule, RuleId::NonabelianIndecomposable);
  EXPECT_EQ(run("Q8", "0").status, Status::Realizable);
  EXPECT_EQ(run("Q8", "2").status, Status::Unknown);
  EXPECT_EQ(run("Q16", "any").status, Status::NotRealizable);
  EXPECT_EQ(run("SD32", "2").status, Status::NotRealizable);
}

TEST(Classify, AnyReportsOpenCharacteristics) {
  const Verdict v = run("C4xC32", "any");
  EXPECT_EQ(v.status, Status::Unknown);
  EXPECT_EQ(v.rule, RuleId::AnyCombined);
  EXPECT_NE(v.notes.find("0"), std::string::npos);
  EXPECT_EQ(run("C16xC16xC16xC16xC16xC16xC2", "0").status, Status::Realizable);
  EXPECT_EQ(run("C64", "any").status, Status::Unknown);
}

TEST(FormulaUnitGroup, Symbolic) {
  EXPECT_EQ(formula_unit_group(*parse_ring("M(Z, C16)")), GroupSpec(parse_abelian("C16xC2")));
  EXPECT_EQ(formula_unit_group(*parse_ring("L")), GroupSpec(parse_group("Q8")));
  EXPECT_EQ(formula_unit_group(*parse_ring("M(Z[i], Z[i]/(1+i)^3)")), GroupSpec(parse_abelian("C4^2xC2")));
  EXPECT_FALSE(formula_unit_group(*parse_ring("F2[D8]")).has_value());
}

}  // namespace
