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
#include <vector>

namespace unitforge {

// Coordinates against an additive basis; entry i lives in Z/d_i.
using Element = std::vector<std::uint64_t>;

// A subgroup of Z/d_1 + ... + Z/d_m.
//
// Membership and order are decided on a Howell-style echelon form kept per
// prime-power component of the exponent, after embedding Z/d_i into Z/c by
// x -> x * (c / d_i). Over F_p this is plain row reduction.
class AdditiveSubgroup {
 public:
  explicit AdditiveSubgroup(std::vector<std::uint64_t> radices);

  // Adds x; returns true when the subgroup grew.
  bool insert(const Element& x);
  bool contains(const Element& x) const;
  std::uint64_t order() const;

  // Additive generators, each one not in the span of the earlier ones.
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::vector<std::uint64_t>& radices() const noexcept { return radices_; }

 private:
  struct Component {
    std::uint64_t prime = 0;
    int power = 0;
    std::uint64_t modulus = 0;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<int> pivot_col;
    std::vector<int> pivot_val;
  };

  std::vector<std::uint64_t> embed(const Element& x, const Component& c) const;
  bool component_contains(const Component& c, std::vector<std::uint64_t> v) const;
  void rebuild(Component& c) const;

  std::vector<std::uint64_t> radices_;
  std::uint64_t exponent_ = 1;
  std::vector<Component> components_;
  std::vector<Element> generators_;
};

}  // namespace unitforge
