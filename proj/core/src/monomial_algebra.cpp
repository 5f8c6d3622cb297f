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

#include "monomial_algebra.hpp"

#include <cctype>

#include "unitforge/error.hpp"

namespace unitforge::detail {

MonomialAlgebra::MonomialAlgebra(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty() || exponents_.size() > kVariableNames.size()) {
    throw InputError("monomial algebra needs 1 to 6 variables");
  }
  long long dim = 1;
  for (int a : exponents_) {
    if (a < 1) throw InputError("truncation exponents must be positive");
    dim *= a;
  }
  if (dim > 32) throw InputError("monomial algebra dimension above 32");
  strides_.assign(exponents_.size(), 1);
  for (std::size_t i = 1; i < exponents_.size(); ++i) {
    strides_[i] = strides_[i - 1] * exponents_[i - 1];
  }
  for (long long idx = 0; idx < dim; ++idx) {
    std::vector<int> e(exponents_.size());
    long long rest = idx;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      e[i] = static_cast<int>(rest % exponents_[i]);
      rest /= exponents_[i];
    }
    monomials_.push_back(std::move(e));
  }
}

int MonomialAlgebra::degree(int m) const {
  int d = 0;
  for (int e : monomials_[static_cast<std::size_t>(m)]) d += e;
  return d;
}

int MonomialAlgebra::index_of(const std::vector<int>& e) const {
  int idx = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (e[i] >= exponents_[i]) return -1;
    idx += e[i] * strides_[i];
  }
  return idx;
}

MonomialAlgebra::Poly MonomialAlgebra::monomial(const std::vector<int>& e) const {
  const int i = index_of(e);
  return i < 0 ? 0 : Poly{1} << i;
}

MonomialAlgebra::Poly MonomialAlgebra::times_monomial(Poly f, int m) const {
  Poly out = 0;
  const auto& em = monomials_[static_cast<std::size_t>(m)];
  while (f != 0) {
    const int j = std::countr_zero(f);
    f &= f - 1;
    std::vector<int> e = monomials_[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += em[i];
    out ^= monomial(e);
  }
  return out;
}

MonomialAlgebra::Poly MonomialAlgebra::parse(std::string_view text) const {
  Poly out = 0;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&] {
    int v = 0;
    bool any = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos++] - '0');
      any = true;
      if (v > 1000) throw InputError("exponent too large in " + std::string(text));
    }
    if (!any) throw InputError("expected a number in " + std::string(text));
    return v;
  };
  while (true) {
    skip();
    std::vector<int> e(exponents_.size(), 0);
    int coeff = 1;
    bool any = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = number() % 2;
      any = true;
    }
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      const auto v = kVariableNames.find(text[pos]);
      if (v == std::string_view::npos || v >= exponents_.size()) {
        throw InputError("unknown variable in " + std::string(text));
      }
      ++pos;
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        power = number();
      }
      e[v] += power;
      any = true;
    }
    if (!any) throw InputError("malformed polynomial: " + std::string(text));
    if (coeff != 0) out ^= monomial(e);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw InputError("malformed polynomial: " + std::string(text));
    ++pos;
  }
  return out;
}

std::string MonomialAlgebra::format(Poly f) const {
  if (f == 0) return "0";
  std::string out;
  for (int j = 0; j < dimension(); ++j) {
    if (((f >> j) & 1u) == 0) continue;
    if (!out.empty()) out += "+";
    std::string term;
    const auto& e = monomials_[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term += kVariableNames[i];
      if (e[i] > 1) term += "^" + std::to_string(e[i]);
    }
    out += term.empty() ? "1" : term;
  }
  return out;
}

std::uint32_t F2Span::reduce(std::uint32_t v) const {
  for (int b = 31; b >= 0 && v != 0; --b) {
    if (((v >> b) & 1u) != 0 && pivot_[static_cast<std::size_t>(b)] != 0) {
      v ^= pivot_[static_cast<std::size_t>(b)];
    }
  }
  return v;
}

bool F2Span::insert(std::uint32_t v) {
  v = reduce(v);
  if (v == 0) return false;
  pivot_[static_cast<std::size_t>(31 - std::countl_zero(v))] = v;
  ++rank_;
  return true;
}

std::vector<std::uint32_t> F2Span::canonical() const {
  auto p = pivot_;
  for (int b = 0; b < 32; ++b) {
    if (p[static_cast<std::size_t>(b)] == 0) continue;
    for (int c = b + 1; c < 32; ++c) {
      auto& row = p[static_cast<std::size_t>(c)];
      if (row != 0 && ((row >> b) & 1u) != 0) row ^= p[static_cast<std::size_t>(b)];
    }
  }
  std::vector<std::uint32_t> out;
  for (auto v : p) {
    if (v != 0) out.push_back(v);
  }
  return out;
}

F2Span ideal_span(const MonomialAlgebra& a, const std::vector<MonomialAlgebra::Poly>& gens) {
  F2Span s;
  for (auto g : gens) {
    for (int m = 0; m < a.dimension(); ++m) s.insert(a.times_monomial(g, m));
  }
  return s;
}

}  // namespace unitforge::detail
