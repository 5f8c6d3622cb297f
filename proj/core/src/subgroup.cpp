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

#include "unitforge/subgroup.hpp"

#include <algorithm>

#include "unitforge/error.hpp"
#include "unitforge/number_theory.hpp"

namespace unitforge {

namespace {

int valuation(std::uint64_t x, std::uint64_t p) {
  int v = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

bool all_zero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace

AdditiveSubgroup::AdditiveSubgroup(std::vector<std::uint64_t> radices)
    : radices_(std::move(radices)) {
  for (std::uint64_t d : radices_) {
    if (d < 1) throw InputError("additive order must be positive");
    exponent_ = nt::lcm(exponent_, d);
  }
  for (auto [p, k] : nt::factorize(exponent_)) {
    Component c;
    c.prime = p;
    c.power = k;
    c.modulus = *nt::checked_pow(p, static_cast<unsigned>(k));
    components_.push_back(std::move(c));
  }
}

std::vector<std::uint64_t> AdditiveSubgroup::embed(const Element& x, const Component& c) const {
  std::vector<std::uint64_t> v(radices_.size());
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    std::uint64_t scale = exponent_ / radices_[i];
    v[i] = nt::mulmod(x[i] % radices_[i], scale % c.modulus, c.modulus);
  }
  return v;
}

bool AdditiveSubgroup::component_contains(const Component& c,
                                          std::vector<std::uint64_t> v) const {
  const std::uint64_t q = c.modulus;
  std::size_t r = 0;
  for (std::size_t col = 0; col < v.size(); ++col) {
    if (r < c.rows.size() && c.pivot_col[r] == static_cast<int>(col)) {
      std::uint64_t pv = *nt::checked_pow(c.prime, static_cast<unsigned>(c.pivot_val[r]));
      if (v[col] % pv != 0) return false;
      std::uint64_t t = v[col] / pv;
      const auto& row = c.rows[r];
      for (std::size_t j = col; j < v.size(); ++j) {
        v[j] = (v[j] + q - nt::mulmod(t, row[j], q)) % q;
      }
      ++r;
    } else if (v[col] != 0) {
      return false;
    }
  }
  return true;
}

void AdditiveSubgroup::rebuild(Component& c) const {
  const std::uint64_t p = c.prime;
  const std::uint64_t q = c.modulus;
  std::vector<std::vector<std::uint64_t>> pending;
  for (const auto& g : generators_) {
    auto v = embed(g, c);
    if (!all_zero(v)) pending.push_back(std::move(v));
  }
  c.rows.clear();
  c.pivot_col.clear();
  c.pivot_val.clear();
  const std::size_t m = radices_.size();
  for (std::size_t col = 0; col < m && !pending.empty(); ++col) {
    std::size_t best = pending.size();
    int best_val = c.power;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i][col] == 0) continue;
      int v = valuation(pending[i][col], p);
      if (best == pending.size() || v < best_val) {
        best = i;
        best_val = v;
      }
    }
    if (best == pending.size()) continue;
    std::vector<std::uint64_t> pivot = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

    const std::uint64_t pv = *nt::checked_pow(p, static_cast<unsigned>(best_val));
    const std::uint64_t unit = *nt::inverse_mod(pivot[col] / pv, q);
    for (auto& x : pivot) x = nt::mulmod(x, unit, q);

    for (auto& row : pending) {
      if (row[col] == 0) continue;
      std::uint64_t t = row[col] / pv;
      for (std::size_t j = col; j < m; ++j) {
        row[j] = (row[j] + q - nt::mulmod(t, pivot[j], q)) % q;
      }
    }
    // p^(k-v) * pivot vanishes in this column and must stay representable
    const std::uint64_t ann = q / pv;
    std::vector<std::uint64_t> saturated(m);
    for (std::size_t j = 0; j < m; ++j) saturated[j] = nt::mulmod(ann, pivot[j], q);
    if (!all_zero(saturated)) pending.push_back(std::move(saturated));

    std::erase_if(pending, all_zero);
    c.rows.push_back(std::move(pivot));
    c.pivot_col.push_back(static_cast<int>(col));
    c.pivot_val.push_back(best_val);
  }
}

bool AdditiveSubgroup::insert(const Element& x) {
  if (x.size() != radices_.size()) throw InputError("element has wrong length");
  if (contains(x)) return false;
  Element reduced(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) reduced[i] = x[i] % radices_[i];
  generators_.push_back(std::move(reduced));
  for (auto& c : components_) rebuild(c);
  return true;
}

bool AdditiveSubgroup::contains(const Element& x) const {
  if (x.size() != radices_.size()) throw InputError("element has wrong length");
  return std::all_of(components_.begin(), components_.end(), [&](const Component& c) {
    return component_contains(c, embed(x, c));
  });
}

std::uint64_t AdditiveSubgroup::order() const {
  std::uint64_t n = 1;
  for (const auto& c : components_) {
    for (int v : c.pivot_val) {
      n *= *nt::checked_pow(c.prime, static_cast<unsigned>(c.power - v));
    }
  }
  return n;
}

}  // namespace unitforge
