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

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace unitforge::detail {

// F_2[x_1..x_r]/(x_1^a_1, ..., x_r^a_r) with elements as bitsets over the
// monomial basis.
class MonomialAlgebra {
 public:
  using Poly = std::uint32_t;

  explicit MonomialAlgebra(std::vector<int> exponents);

  int dimension() const noexcept { return static_cast<int>(monomials_.size()); }
  int variables() const noexcept { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  const std::vector<std::vector<int>>& monomials() const noexcept { return monomials_; }
  int degree(int m) const;

  // Index of the monomial with these exponents, or -1 when it vanishes.
  int index_of(const std::vector<int>& e) const;
  Poly monomial(const std::vector<int>& e) const;
  Poly times_monomial(Poly f, int m) const;

  // Sums of terms like "x^3", "xy^2", "1".
  Poly parse(std::string_view text) const;
  std::string format(Poly f) const;

 private:
  std::vector<int> exponents_;
  std::vector<std::vector<int>> monomials_;
  std::vector<int> strides_;
};

// Row-reduced F_2 span of bitsets.
class F2Span {
 public:
  // Returns true when v was independent of the current span.
  bool insert(std::uint32_t v);
  bool contains(std::uint32_t v) const { return reduce(v) == 0; }
  int rank() const noexcept { return rank_; }
  // Canonical fully reduced basis, for comparing spans.
  std::vector<std::uint32_t> canonical() const;

 private:
  std::uint32_t reduce(std::uint32_t v) const;
  std::array<std::uint32_t, 32> pivot_{};
  int rank_ = 0;
};

// Ideal generated by the given polynomials: span of all monomial multiples.
F2Span ideal_span(const MonomialAlgebra& a, const std::vector<MonomialAlgebra::Poly>& gens);

inline constexpr std::string_view kVariableNames = "xyzuvw";

}  // namespace unitforge::detail
