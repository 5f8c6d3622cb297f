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
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unitforge/config.hpp"
#include "unitforge/groups.hpp"
#include "unitforge/ring.hpp"

namespace unitforge {

struct ConstructionExpr;
using ExprPtr = std::shared_ptr<const ConstructionExpr>;

namespace node {

struct Zn {
  std::uint64_t n = 2;
};
struct GF {
  std::uint64_t p = 2;
  int k = 1;
};
struct GR {
  std::uint64_t p = 2;
  int n = 2;
  int lambda = 1;
};
// F_p[x_1..x_r]/(x_1^a_1, ..., x_r^a_r).
struct TruncPoly {
  std::uint64_t p = 2;
  std::vector<int> exponents;
  std::vector<std::string> variables;  // defaults to x, y, z, u, v, w
};
struct GroupAlgebra {
  std::uint64_t p = 2;
  GroupSpec group;
};
// Upper triangular size x size matrices over F_p.
struct UpperTri {
  std::uint64_t p = 2;
  int size = 2;
};
struct Product {
  std::vector<ExprPtr> children;
};
// Direct sum of Z[i]/(1+i)^k over the listed k.
struct GaussianModules {
  std::vector<int> ks;
};
// 2x2 upper triangular matrices (r, h; 0, r) with h in an R-module.
struct Triangular {
  ExprPtr base;
  std::variant<AbelianType, GaussianModules> module;
};
struct Quotient {
  ExprPtr base;
  std::vector<std::string> relations;
};
// Z[i]/(1+i)^n.
struct GaussianQuotient {
  int n = 1;
};
enum class InfiniteTag { Z, GaussianZ, LipschitzL };
struct SymbolicInfinite {
  InfiniteTag tag = InfiniteTag::Z;
};

}  // namespace node

struct ConstructionExpr {
  using Node = std::variant<node::Zn, node::GF, node::GR, node::TruncPoly, node::GroupAlgebra,
                            node::UpperTri, node::Product, node::Triangular, node::Quotient,
                            node::GaussianQuotient, node::SymbolicInfinite>;
  Node node;
};

// Node factories.
ExprPtr make_zn(std::uint64_t n);
ExprPtr make_gf(std::uint64_t p, int k);
ExprPtr make_gr(std::uint64_t p, int n, int lambda);
ExprPtr make_trunc_poly(std::uint64_t p, std::vector<int> exponents);
ExprPtr make_group_algebra(std::uint64_t p, GroupSpec g);
ExprPtr make_upper_tri(std::uint64_t p, int size);
ExprPtr make_product(std::vector<ExprPtr> children);
ExprPtr make_triangular(ExprPtr base, AbelianType module);
ExprPtr make_gaussian_triangular(ExprPtr base, std::vector<int> ks);
ExprPtr make_quotient(ExprPtr base, std::vector<std::string> relations);
ExprPtr make_gaussian_quotient(int n);
ExprPtr make_infinite(node::InfiniteTag tag);

// Text form in the ring-expression grammar; parse_ring(to_string(e)) == e.
std::string to_string(const ConstructionExpr& e);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }

bool is_finite(const ConstructionExpr& e);
// Characteristic of the described ring, 0 for the infinite ones.
std::uint64_t characteristic_of(const ConstructionExpr& e, const Limits& limits = {});

// Builds the structure constants. Throws InputError on symbolic nodes or bad
// parameters and CapExceeded when the ring is too large.
RingPresentation evaluate(const ConstructionExpr& e, const Limits& limits = {});
Ring build_ring(const ConstructionExpr& e, const Limits& limits = {});

// Lexicographically least monic irreducible polynomial of degree k over
// F_p, as coefficients c_0..c_{k-1} (the leading 1 omitted).
std::vector<std::uint64_t> least_irreducible(std::uint64_t p, int k);

// Ring-expression grammar: Z[8], GF[2,3], GR[2,3,2], F2[x,y]/(x^5,y^4),
// F2[x,y]/(x^5,y^4,x^3+y^2), F2[D8], U3[F2], M(Z[8], C2xC4),
// M(Z[i], Z[i]/(1+i)^3+Z[i]/(1+i)^2), A * B, quot(R; x^3+y^2), Z, Z[i],
// Z[i]/(1+i)^4, L.
ExprPtr parse_ring(std::string_view text);

// Evaluates a polynomial in the ring's named symbols, e.g. "x^3+y^2" or
// "1+xy^2". Integers denote multiples of one.
Element parse_element(const Ring& r, std::string_view text);

}  // namespace unitforge
