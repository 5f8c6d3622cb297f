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

#include "unitforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "monomial_algebra.hpp"
#include "unitforge/classify.hpp"
#include "unitforge/error.hpp"
#include "unitforge/formulas.hpp"
#include "unitforge/number_theory.hpp"
#include "unitforge/ring.hpp"
#include "unitforge/units.hpp"

namespace unitforge {

namespace {

using detail::F2Span;
using detail::MonomialAlgebra;

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) : start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(name);
  }

  void add(std::string desc, std::string expected, std::string observed, bool pass) {
    report_.cases.push_back({std::move(desc), std::move(expected), std::move(observed), pass});
    report_.pass = report_.pass && pass;
  }

  void check(std::string desc, const std::string& expected, const std::string& observed) {
    add(std::move(desc), expected, observed, expected == observed);
  }

  void vacuous(std::string desc, const std::string& reason) {
    add(std::move(desc), "precondition", std::string(kVacuous) + ": " + reason, true);
  }

  SuiteReport finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_.ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe(const UnitGroupReport& rep) {
  if (rep.abelian) return rep.abelian_type->to_string();
  std::string s = "nonabelian of order " + std::to_string(rep.order);
  if (rep.identified) s += " (" + rep.identified->to_string() + ")";
  return s;
}

UnitGroupReport brute_units(const ExprPtr& e, const Limits& limits) {
  return unit_group_report(build_ring(*e, limits));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void c48_block(SuiteBuilder& sb, const std::string& label, std::vector<int> exps,
               const std::string& base, const std::vector<std::string>& cases) {
  const MonomialAlgebra a(std::move(exps));
  const auto target = a.parse("x^4");
  const auto b = a.parse(base);
  const std::string ring =
      "F2[x,y]/(x^" + std::to_string(a.exponents()[0]) + ",y^" + std::to_string(a.exponents()[1]) + ")";
  {
    const F2Span ideal = ideal_span(a, {b});
    sb.check(label + ": x^4 in (" + base + ") of " + ring, "no", yes_no(ideal.contains(target)));
  }
  for (const auto& c : cases) {
    const F2Span ideal = ideal_span(a, {b, a.parse(c)});
    sb.check(label + ": x^4 in (" + base + ", " + c + ") of " + ring, "yes",
             yes_no(ideal.contains(target)));
  }
}

// Multisets k_1 >= k_2 >= ... with sum d and prod C_{p^k_i - 1} equal to u.
std::optional<std::vector<int>> field_partition(std::uint64_t p, int d, const AbelianType& u) {
  std::vector<int> parts;
  std::function<bool(int, int, const AbelianType&)> rec = [&](int left, int max_part,
                                                             const AbelianType& acc) {
    if (left == 0) return acc == u;
    for (int k = std::min(left, max_part); k >= 1; --k) {
      auto q = nt::checked_pow(p, static_cast<unsigned>(k));
      if (!q) continue;
      const AbelianType next = product(acc, AbelianType::cyclic(*q - 1));
      if (!has_subgroup(u, next)) continue;
      parts.push_back(k);
      if (rec(left - k, k, next)) return true;
      parts.pop_back();
    }
    return false;
  };
  if (!rec(d, d, AbelianType())) return std::nullopt;
  return parts;
}

// Image of x -> x^(2^k): odd parts are unchanged.
AbelianType power_image(const AbelianType& g, unsigned k) {
  std::vector<PrimePowerFactor> odd;
  std::vector<PrimePowerFactor> two;
  for (const auto& f : g.factors()) (f.prime == 2 ? two : odd).push_back(f);
  return product(power_down(AbelianType::from_factors(two), k), AbelianType::from_factors(odd));
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::size_t SuiteReport::vacuous_count() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) {
    return c.observed.rfind(kVacuous, 0) == 0;
  }));
}

SuiteReport suite_an_formula(std::uint64_t p, int n_max, const Limits& limits) {
  if (!nt::is_prime(p)) throw InputError("suite_an_formula needs a prime");
  if (n_max < 1) throw InputError("suite_an_formula needs n_max >= 1");
  SuiteBuilder sb("an_formula");
  for (int n = 1; n <= n_max; ++n) {
    const ExprPtr ring = make_trunc_poly(p, {n});
    const UnitGroupReport rep = brute_units(ring, limits);
    sb.check("units of " + to_string(ring),
             formulas::truncated_poly_units(p, static_cast<std::uint64_t>(n)).to_string(),
             describe(rep));
  }
  return sb.finish();
}

SuiteReport suite_c48() {
  SuiteBuilder sb("c48");
  c48_block(sb, "C8xC4", {5, 4}, "x^3+y^2", {"xy", "xy+x^4", "xy+y^2", "xy+x^4+y^2+x^4y^2"});
  c48_block(sb, "C8xC8", {5, 5}, "x^3+y^4",
            {"xy^2", "xy^2+x^4", "xy^2+y^4", "xy^2+x^4+y^4+x^4y^4"});
  return sb.finish();
}

SuiteReport suite_power_down(const std::vector<ExprPtr>& rings, unsigned k_max,
                             const Limits& limits) {
  SuiteBuilder sb("power_down");
  for (const auto& e : rings) {
    const Ring r = build_ring(*e, limits);
    if (r.characteristic() != 2 || !r.is_commutative()) {
      throw InputError(to_string(e) + " is not a commutative ring of characteristic 2");
    }
    const UnitGroupReport rep = unit_group_report(r);
    for (unsigned k = 1; k <= k_max; ++k) {
      const Ring q = quotient(r, frobenius_kernel(r, k));
      sb.check("units of " + to_string(e) + " modulo the 2^" + std::to_string(k) +
                   "-power kernel",
               power_image(*rep.abelian_type, k).to_string(), describe(unit_group_report(q)));
    }
  }
  return sb.finish();
}

SuiteReport suite_matrix_trick(const std::vector<MatrixTrickCase>& cases, const Limits& limits) {
  SuiteBuilder sb("matrix_trick");
  for (const auto& c : cases) {
    const Ring base = build_ring(*c.base, limits);
    const ExprPtr m = make_triangular(c.base, c.module);
    const Ring mr = build_ring(*m, limits);
    const UnitGroupReport ub = unit_group_report(base);
    if (!ub.abelian) throw InputError(to_string(c.base) + " has nonabelian units");
    sb.check("units of " + to_string(m), product(*ub.abelian_type, c.module).to_string(),
             describe(unit_group_report(mr)));
    sb.check("characteristic of " + to_string(m), std::to_string(base.characteristic()),
             std::to_string(mr.characteristic()));
  }
  return sb.finish();
}

SuiteReport suite_group_algebra(std::uint64_t p, const std::vector<GroupSpec>& groups,
                                const Limits& limits) {
  SuiteBuilder sb("group_algebra");
  for (const auto& g : groups) {
    const ExprPtr e = make_group_algebra(p, g);
    const UnitGroupReport rep = brute_units(e, limits);
    std::uint64_t order = 1;
    if (const auto* a = std::get_if<AbelianType>(&g)) {
      order = static_cast<std::uint64_t>(a->order());
    } else {
      order = std::get<NamedGroup>(g).order();
    }
    sb.check("unit count of " + to_string(e),
             formulas::group_algebra_unit_count(p, order).str(), std::to_string(rep.order));
    const bool dq8 = std::holds_alternative<NamedGroup>(g) && std::get<NamedGroup>(g).order() == 8;
    if (dq8) sb.check("units of " + to_string(e) + " nonabelian", "yes", yes_no(!rep.abelian));
  }
  return sb.finish();
}

SuiteReport suite_witness_catalog(const Limits& limits) {
  SuiteBuilder sb("witness_catalog");
  const std::vector<std::pair<std::string, std::string>> fixed = {
      {"GF[3,2]", "C8"},         {"GF[3,1]", "C2"},       {"GF[5,1]", "C4"},
      {"GF[17,1]", "C16"},       {"GF[2,2]", "C3"},       {"GF[2,3]", "C7"},
      {"GF[2,5]", "C31"},        {"F2[x]/(x^5)", "C8xC2"}, {"F2[x]/(x^4)", "C4xC2"},
      {"F2[x]/(x^3)", "C4"},     {"Z[16]", "C4xC2"},      {"Z[4]", "C2"},
      {"M(Z[16], C2)", "C4xC2^2"}, {"M(Z[4], C4)", "C4xC2"},
  };
  for (const auto& [text, expected] : fixed) {
    const ExprPtr e = parse_ring(text);
    sb.check("units of " + text, parse_abelian(expected).to_string(), describe(brute_units(e, limits)));
  }
  {
    const UnitGroupReport rep = brute_units(make_upper_tri(2, 3), limits);
    sb.check("U3[F2] identified", "D8",
             rep.identified ? rep.identified->to_string() : describe(rep));
    sb.check("U3[F2] unit count", "8", std::to_string(rep.order));
    const auto it = rep.order_histogram.find(4);
    sb.check("U3[F2] elements of order 4", "2",
             std::to_string(it == rep.order_histogram.end() ? 0 : it->second));
  }
  for (const char* g : {"D8", "Q8"}) {
    const ExprPtr e = make_group_algebra(2, parse_group(g));
    const UnitGroupReport rep = brute_units(e, limits);
    sb.check("units of " + to_string(e), "nonabelian of order 128",
             rep.abelian ? describe(rep) : "nonabelian of order " + std::to_string(rep.order));
  }
  for (int n = 1; n <= 8; ++n) {
    const ExprPtr e = make_gaussian_quotient(n);
    sb.check("units of " + to_string(e), formulas::gaussian_quotient_units(n).to_string(),
             describe(brute_units(e, limits)));
    sb.check("characteristic of " + to_string(e), std::to_string(std::uint64_t{1} << ((n + 1) / 2)),
             std::to_string(build_ring(*e, limits).characteristic()));
  }
  for (std::uint64_t p : {2u, 3u}) {
    for (int n : {2, 3}) {
      for (int lambda : {1, 2}) {
        const ExprPtr e = make_gr(p, n, lambda);
        try {
          sb.check("units of " + to_string(e),
                   formulas::galois_ring_units(p, n, lambda).to_string(),
                   describe(brute_units(e, limits)));
        } catch (const CapExceeded& ex) {
          sb.vacuous("units of " + to_string(e), ex.what());
        }
      }
    }
  }
  const std::vector<std::pair<std::string, CharSpec>> queries = {
      {"1", CharSpec::equals(2)},         {"C2", CharSpec::equals(2)},
      {"C4", CharSpec::equals(2)},        {"C2xC2", CharSpec::equals(2)},
      {"C4xC2", CharSpec::equals(2)},     {"C4xC4", CharSpec::equals(2)},
      {"C8xC2", CharSpec::equals(2)},     {"C2^3", CharSpec::equals(2)},
      {"C4xC2^2", CharSpec::equals(2)},   {"C8xC2xC2", CharSpec::equals(2)},
      {"C8", CharSpec::odd()},            {"C4xC2", CharSpec::odd()},
      {"C16", CharSpec::odd()},           {"C8", CharSpec::any()},
      {"C2xC4xC2", CharSpec::two_power(4)}, {"C4xC4xC2", CharSpec::equals(8)},
      {"C4xC2", CharSpec::equals(4)},     {"C4xC2xC2", CharSpec::equals(12)},
      {"C7xC7", CharSpec::any()},         {"C3", CharSpec::any()},
      {"D8", CharSpec::any()},            {"C4xC2", CharSpec::any()},
  };
  for (const auto& [g, spec] : queries) {
    const GroupSpec group = parse_group(g);
    const Verdict v = classify(group, spec);
    if (v.status != Status::Realizable) {
      sb.add("classifier witness for " + g + " in characteristic " + spec.to_string(),
             "Realizable", std::string(status_name(v.status)), false);
      continue;
    }
    const std::string err = self_verify(v, group, limits);
    sb.add("classifier witness " + to_string(v.witness) + " for " + g, "verified",
           err.empty() ? "verified" : err, err.empty());
  }
  return sb.finish();
}

SuiteReport suite_j0(const std::vector<ExprPtr>& cases, const Limits& limits) {
  SuiteBuilder sb("j0");
  for (const auto& e : cases) {
    const Ring r = build_ring(*e, limits);
    const std::uint64_t p = r.characteristic();
    const std::string name = to_string(e);
    if (!nt::is_prime(p)) {
      sb.vacuous(name, "characteristic " + std::to_string(p) + " is not prime");
      continue;
    }
    const UnitGroupReport rep = unit_group_report(r);
    if (nt::gcd(rep.order, p) != 1) {
      sb.vacuous(name, "unit count " + std::to_string(rep.order) + " is divisible by " +
                           std::to_string(p));
      continue;
    }
    const IdealSubspace j = jacobson_radical(r);
    sb.check("radical order of " + name, "1", std::to_string(j.order()));
    sb.check("units of " + name + " abelian", "yes", yes_no(rep.abelian));
    const auto d = nt::exact_log(r.order(), p);
    if (!rep.abelian || !d) continue;
    const auto parts = field_partition(p, *d, *rep.abelian_type);
    sb.add("units of " + name + " as a product of C_{p^k - 1} with sum k = " + std::to_string(*d),
           "partition exists", parts ? "partition " + join(*parts) : "none", parts.has_value());
  }
  return sb.finish();
}

std::vector<ExprPtr> default_power_down_rings() {
  std::vector<ExprPtr> out;
  for (int n = 1; n <= 12; ++n) out.push_back(make_trunc_poly(2, {n}));
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; b <= a && a * b <= 12; ++b) out.push_back(make_trunc_poly(2, {a, b}));
  }
  out.push_back(make_trunc_poly(2, {2, 2, 2}));
  for (int k = 1; k <= 4; ++k) out.push_back(make_gf(2, k));
  out.push_back(make_group_algebra(2, parse_group("C4")));
  out.push_back(make_group_algebra(2, parse_group("C2xC2")));
  out.push_back(make_product({make_trunc_poly(2, {5}), make_trunc_poly(2, {3})}));
  return out;
}

std::vector<MatrixTrickCase> default_matrix_trick_cases() {
  return {
      {make_zn(8), parse_abelian("C2xC4")},
      {make_zn(2), AbelianType()},
      {make_gf(3, 1), parse_abelian("C3")},
      {make_zn(4), parse_abelian("C2xC2")},
      {make_zn(16), parse_abelian("C2")},
      {make_trunc_poly(2, {3}), parse_abelian("C2^3")},
      {make_zn(9), parse_abelian("C9xC3")},
      {make_zn(12), parse_abelian("C6")},
      {make_trunc_poly(3, {2}), parse_abelian("C3^2")},
      {make_trunc_poly(2, {5}), parse_abelian("C2^4")},
  };
}

std::vector<GroupSpec> default_group_algebra_groups(std::uint64_t p) {
  if (p == 2) {
    return {parse_group("1"), parse_group("C2"), parse_group("C4"), parse_group("C2xC2"),
            parse_group("C8"), parse_group("D8"), parse_group("Q8")};
  }
  if (p == 3) return {parse_group("1"), parse_group("C3"), parse_group("C9")};
  return {parse_group("1"), AbelianType::cyclic(p)};
}

std::vector<ExprPtr> default_j0_cases() {
  return {
      make_product({make_gf(2, 1), make_gf(2, 3)}),
      make_gf(3, 2),
      make_gf(2, 4),
      make_product({make_gf(5, 1), make_gf(5, 2)}),
      make_group_algebra(2, parse_group("C3")),
      make_group_algebra(3, parse_group("C2")),
      make_group_algebra(2, parse_group("C5")),
      make_group_algebra(5, parse_group("C2")),
      make_group_algebra(2, parse_group("C7")),
      make_product({make_gf(2, 2), make_gf(2, 2), make_gf(2, 1)}),
      make_trunc_poly(2, {2}),
  };
}

std::optional<ExprPtr> search_witness(const AbelianType& target, const SearchOptions& options,
                                      const Limits& limits) {
  if (!target.is_p_group(2)) throw InputError("search target must be a 2-group");
  if (options.max_dim < 1 || options.max_dim > 32) throw InputError("max_dim must be in [1, 32]");
  if (options.max_generators < 0) throw InputError("max_generators must be nonnegative");
  if (BigInt(1) << options.max_dim > BigInt(limits.ring_order_cap)) {
    throw CapExceeded("search dimension", std::uint64_t{1} << std::min(options.max_dim, 63),
                      limits.ring_order_cap);
  }
  int log_order = 0;
  for (int e : target.exponents(2)) log_order += e;
  const int qdim = log_order + 1;
  if (qdim > options.max_dim) return std::nullopt;

  std::vector<std::vector<int>> shapes;
  std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& cur, int dim) {
    if (!cur.empty()) shapes.push_back(cur);
    if (cur.size() == detail::kVariableNames.size()) return;
    const int top = cur.empty() ? options.max_dim : cur.back();
    for (int a = 2; a <= top && dim * a <= options.max_dim; ++a) {
      cur.push_back(a);
      gen(cur, dim * a);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  gen(cur, 1);
  shapes.push_back({1});
  auto dim_of = [](const std::vector<int>& s) {
    int d = 1;
    for (int a : s) d *= a;
    return d;
  };
  std::stable_sort(shapes.begin(), shapes.end(), [&](const auto& x, const auto& y) {
    if (dim_of(x) != dim_of(y)) return dim_of(x) < dim_of(y);
    return x < y;
  });

  for (const auto& shape : shapes) {
    const int dim = dim_of(shape);
    if (dim < qdim) continue;
    const MonomialAlgebra a(shape);
    std::vector<MonomialAlgebra::Poly> pool;
    for (int m = 1; m < dim; ++m) pool.push_back(MonomialAlgebra::Poly{1} << m);
    for (int m = 1; m < dim; ++m) {
      for (int n = m + 1; n < dim; ++n) {
        pool.push_back((MonomialAlgebra::Poly{1} << m) | (MonomialAlgebra::Poly{1} << n));
      }
    }
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<MonomialAlgebra::Poly> chosen;
    std::optional<ExprPtr> found;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
      const F2Span ideal = ideal_span(a, chosen);
      if (dim - ideal.rank() == qdim && seen.insert(ideal.canonical()).second) {
        const ExprPtr base = make_trunc_poly(2, shape);
        std::vector<std::string> rels;
        for (auto g : chosen) rels.push_back(a.format(g));
        const ExprPtr e = rels.empty() ? base : make_quotient(base, rels);
        const UnitGroupReport rep = unit_group_report(build_ring(*e, limits));
        if (rep.abelian && *rep.abelian_type == target) {
          found = e;
          return true;
        }
      }
      if (dim - ideal.rank() <= qdim) return false;
      if (static_cast<int>(chosen.size()) >= options.max_generators) return false;
      for (std::size_t i = start; i < pool.size(); ++i) {
        if (ideal.contains(pool[i])) continue;
        chosen.push_back(pool[i]);
        if (rec(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(0)) {
      const UnitGroupReport check = unit_group_report(build_ring(**found, limits));
      if (!check.abelian || *check.abelian_type != target) {
        throw Error("search produced a witness that fails its own check");
      }
      return found;
    }
  }
  return std::nullopt;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"an_formula",    "c48",    "power_down",
                                                 "matrix_trick",  "group_algebra",
                                                 "witness_catalog", "j0"};
  return names;
}

SuiteReport run_suite(std::string_view name, const Limits& limits) {
  if (name == "an_formula") {
    SuiteReport r = suite_an_formula(2, 12, limits);
    SuiteReport r3 = suite_an_formula(3, 7, limits);
    r.cases.insert(r.cases.end(), r3.cases.begin(), r3.cases.end());
    r.pass = r.pass && r3.pass;
    r.ms += r3.ms;
    return r;
  }
  if (name == "c48") return suite_c48();
  if (name == "power_down") return suite_power_down(default_power_down_rings(), 2, limits);
  if (name == "matrix_trick") return suite_matrix_trick(default_matrix_trick_cases(), limits);
  if (name == "group_algebra") {
    SuiteReport r = suite_group_algebra(2, default_group_algebra_groups(2), limits);
    SuiteReport r3 = suite_group_algebra(3, default_group_algebra_groups(3), limits);
    r.cases.insert(r.cases.end(), r3.cases.begin(), r3.cases.end());
    r.pass = r.pass && r3.pass;
    r.ms += r3.ms;
    return r;
  }
  if (name == "witness_catalog") return suite_witness_catalog(limits);
  if (name == "j0") return suite_j0(default_j0_cases(), limits);
  throw InputError("unknown suite: " + std::string(name));
}

}  // namespace unitforge
