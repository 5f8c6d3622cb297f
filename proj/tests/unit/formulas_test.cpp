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
#include "unitforge/error.hpp"
#include "unitforge/formulas.hpp"
#include "unitforge/number_theory.hpp"

namespace {

using namespace unitforge;

TEST(Formulas, FermatAndMersenne) {
  for (std::uint64_t q : {3u, 5u, 17u, 257u, 65537u}) EXPECT_TRUE(formulas::is_fermat_prime(q));
  for (std::uint64_t q : {2u, 7u, 9u, 33u, 129u}) EXPECT_FALSE(formulas::is_fermat_prime(q));
  for (std::uint64_t p : {3u, 7u, 31u, 127u, 8191u}) EXPECT_TRUE(formulas::is_mersenne_prime(p));
  for (std::uint64_t p : {2u, 5u, 15u, 63u, 2047u}) EXPECT_FALSE(formulas::is_mersenne_prime(p));
  EXPECT_THROW(formulas::is_fermat_prime((std::uint64_t{1} << 32) + 1), UnknownFermatCandidate);
}

TEST(Formulas, AdmissibleCharacteristicMatchesTotient) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    EXPECT_EQ(formulas::admissible_characteristic(n), nt::is_power_of_two(oracle::totient(n))) << n;
  }
  EXPECT_THROW(formulas::admissible_characteristic(0), InputError);
}

TEST(Formulas, TruncatedPolyAgreesWithPolynomialArithmetic) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(formulas::truncated_poly_units(2, static_cast<std::uint64_t>(n)), oracle::truncated_poly_units(2, n)) << n;
  }
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(formulas::truncated_poly_units(3, static_cast<std::uint64_t>(n)), oracle::truncated_poly_units(3, n)) << n;
  }
  EXPECT_EQ(formulas::truncated_poly_units(5, 3), oracle::truncated_poly_units(5, 3));
}

TEST(Formulas, TruncatedPolyRank) {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    EXPECT_EQ(formulas::truncated_poly_units(2, n).rank(), n / 2) << n;
    EXPECT_EQ(formulas::truncated_poly_units(2, n).order(), BigInt(1) << (n - 1)) << n;
  }
}

TEST(Formulas, ZnUnitsAgreeWithEnumeration) {
  for (std::uint64_t n = 2; n <= 300; ++n) EXPECT_EQ(formulas::zn_units(n), oracle::zn_units(n)) << n;
}

TEST(Formulas, GaussianQuotientAgreesWithPairArithmetic) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(formulas::gaussian_quotient_units(n), oracle::gaussian_quotient_units(n)) << n;
  }
  EXPECT_EQ(formulas::gaussian_quotient_units(4), parse_abelian("C4xC2"));
}

TEST(Formulas, GaussianModuleAdditive) {
  EXPECT_EQ(formulas::gaussian_module_additive(1), parse_abelian("C2"));
  EXPECT_EQ(formulas::gaussian_module_additive(2), parse_abelian("C2^2"));
  EXPECT_EQ(formulas::gaussian_module_additive(3), parse_abelian("C4xC2"));
  EXPECT_EQ(formulas::gaussian_module_additive(6), parse_abelian("C8^2"));
}

TEST(Formulas, GaloisRingOrders) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    EXPECT_THROW(formulas::galois_ring_units(p, 1, 2), InputError);
    for (int n = 2; n <= 4; ++n) {
      for (int l = 1; l <= 3; ++l) {
        BigInt pl = 1;
        for (int i = 0; i < l; ++i) pl *= p;
        BigInt total = 1;
        for (int i = 0; i < n - 1; ++i) total *= pl;
        EXPECT_EQ(formulas::galois_ring_units(p, n, l).order(), (pl - 1) * total);
      }
    }
  }
  EXPECT_EQ(formulas::galois_ring_units(2, 2, 2), parse_abelian("C3xC2^2"));
}

TEST(Formulas, GroupAlgebraUnitCount) {
  EXPECT_EQ(formulas::group_algebra_unit_count(2, 8), 128);
  EXPECT_EQ(formulas::group_algebra_unit_count(3, 3), 18);
  EXPECT_EQ(formulas::group_algebra_unit_count(2, 1), 1);
  EXPECT_THROW(formulas::group_algebra_unit_count(2, 6), InputError);
}

}  // namespace
