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

#include "unitforge/classify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "unitforge/error.hpp"
#include "unitforge/formulas.hpp"
#include "unitforge/number_theory.hpp"
#include "unitforge/units.hpp"

namespace unitforge {

namespace {

struct RuleInfo {
  RuleId id;
  std::string_view name;
  std::string_view citation;
};

constexpr RuleInfo kRules[] = {
    {RuleId::OddCharForm, "ODD_CHAR_FORM",
     "A finite 2-group is the unit group of a ring of odd characteristic iff it is "
     "C_8^t x prod C_{2^n_i}^{s_i} with every 2^n_i + 1 a Fermat prime."},
    {RuleId::OddCharTrivial, "ODD_CHAR_TRIVIAL",
     "In a nonzero ring of odd characteristic -1 != 1 is a unit of order 2."},
    {RuleId::CharInadmissible, "CHAR_INADMISSIBLE",
     "Some 2-group is a unit group in characteristic n iff n = 2^a p_1...p_k with distinct "
     "Fermat primes p_i."},
    {RuleId::FermatComponent, "FERMAT_COMPONENT",
     "A ring of characteristic 2^a p_1...p_k splits as S x R_1 x ... x R_k with char R_i = p_i; "
     "each R_i is nonzero with units C_2^s x C_8^t (p_i = 3) or C_{p_i-1}^s (p_i > 3)."},
    {RuleId::Char2Rank12, "CHAR2_RANK12",
     "The abelian 2-groups of rank at most 2 realizable in characteristic 2 are 1, C2, C4, "
     "C2xC2, C4xC2, C4xC4 and C8xC2."},
    {RuleId::Char2RankLimit, "CHAR2_RANK_LIMIT",
     "If an abelian 2-group of rank n is realizable in characteristic 2 then |x| <= 4n for "
     "every element x."},
    {RuleId::Char2OrderBound, "CHAR2_ORDER_BOUND",
     "If a group of order 2^m with an element of order 2^r (r >= 2) is realizable in "
     "characteristic 2 then 2^(r-2) + r - 1 <= m."},
    {RuleId::Char2PowerDown, "CHAR2_POWER_DOWN",
     "If G is realizable in characteristic 2 then so is G_{2^k} = {x^(2^k)} for every k."},
    {RuleId::Char2ProductCover, "CHAR2_PRODUCT_COVER",
     "The unit group of a product of rings is the product of the unit groups; "
     "F_2[x]/(x^n) has units prod_{1<=i<=n-1, i odd} C_{2^ceil(log2(n/i))}."},
    {RuleId::Char2Open, "CHAR2_OPEN",
     "No necessary condition excludes the group and no catalogued product of "
     "characteristic 2 rings realizes it."},
    {RuleId::Char2nMatrix, "CHAR2N_MATRIX",
     "For n >= 2 and exp(Q) <= 2^n the ring M(Z/2^n, Q) has characteristic 2^n and units "
     "C_2 x C_{2^(n-2)} x Q."},
    {RuleId::Char2nGaussian, "CHAR2N_GAUSSIAN",
     "Z[i]/(1+i)^k has characteristic 2^ceil(k/2), and its unit group has order 2^(k-1) "
     "with invariants read off the filtration by powers of (1+i)."},
    {RuleId::Char2nSubgroup, "CHAR2N_SUBGROUP",
     "A ring of characteristic 2^n contains Z/2^n, so for n >= 2 its units contain "
     "C_2 x C_{2^(n-2)}."},
    {RuleId::Char2nOpen, "CHAR2N_OPEN",
     "The group contains C_2 x C_{2^(n-2)} but matches no known construction."},
    {RuleId::Char0Summand, "CHAR0_SUMMAND",
     "A finite 2-group realizable in characteristic 0 has C_2 or C_4 as a direct summand."},
    {RuleId::Char0C2Module, "CHAR0_C2_MODULE",
     "Z^x = C_2, so M(Z, P) has characteristic 0 and units C_2 x P for every finite abelian P."},
    {RuleId::Char0GaussianModule, "CHAR0_GAUSSIAN_MODULE",
     "Z[i]^x = C_4 and Z[i]/(1+i)^k is C_{2^m}^2 (k = 2m) or C_{2^(m+1)} x C_{2^m} "
     "(k = 2m+1) additively, so C_4 x A x A x B x B_2 is realizable in characteristic 0."},
    {RuleId::Char0Open, "CHAR0_OPEN",
     "The group has a C_2 or C_4 summand but matches no known characteristic 0 construction."},
    {RuleId::OddPMersenne, "ODD_P_MERSENNE",
     "For odd p a finite p-group is realizable iff it is elementary abelian and p is a "
     "Mersenne prime, and then only in characteristic 2."},
    {RuleId::AlmostCyclicList, "ALMOST_CYCLIC_LIST",
     "The realizable almost cyclic p-groups are C_2, C_4, C_8, C_{q-1} (q Fermat), "
     "C_2 x C_{2^n}, C_p and C_p x C_p (p Mersenne), D_8 and Q_8."},
    {RuleId::PeriodicCohomologyList, "PERIODIC_COHOMOLOGY_LIST",
     "The realizable p-groups with periodic cohomology are C_2, C_4, C_8, C_p (p Mersenne), "
     "C_{q-1} (q Fermat) and Q_8."},
    {RuleId::OrderP3List, "ORDER_P3_LIST",
     "The realizable groups of order p^3 are C_4 x C_2, C_8, D_8, Q_8 and C_p^3 for p = 2 or "
     "p Mersenne."},
    {RuleId::NonabelianCenter, "NONABELIAN_CENTER",
     "If a realizable nonabelian 2-group has cyclic center, the center is C_2 or C_4."},
    {RuleId::NonabelianCyclicMaximal, "NONABELIAN_CYCLIC_MAXIMAL",
     "Every cyclic maximal abelian subgroup of a realizable nonabelian 2-group is C_2 or C_4."},
    {RuleId::NonabelianIndecomposable, "NONABELIAN_INDECOMPOSABLE",
     "In characteristic 2^a m with m > 1 odd the units split as S^x x R'^x with R'^x abelian "
     "and nontrivial, so an indecomposable nonabelian group cannot occur."},
    {RuleId::NonabelianOddChar, "NONABELIAN_ODD_CHAR",
     "A ring of odd characteristic with 2-group units has abelian units."},
    {RuleId::NonabelianOpen, "NONABELIAN_OPEN",
     "No rule decides this nonabelian group in the requested characteristic."},
    {RuleId::AnyCombined, "ANY_COMBINED",
     "A 2-group is realizable iff it is realizable in characteristic 0 or in some admissible "
     "characteristic 2^a p_1...p_k."},
};

const RuleInfo& info(RuleId r) {
  for (const auto& i : kRules) {
    if (i.id == r) return i;
  }
  throw Error("unregistered rule");
}

Verdict make_realizable(const CharSpec& spec, ExprPtr witness, RuleId rule, std::string notes = {}) {
  Verdict v;
  v.status = Status::Realizable;
  v.spec = spec;
  v.witness_char = characteristic_of(*witness);
  v.witness = std::move(witness);
  v.rule = rule;
  v.notes = std::move(notes);
  return v;
}

Verdict make_verdict(Status s, const CharSpec& spec, RuleId rule, std::string notes = {}) {
  Verdict v;
  v.status = s;
  v.spec = spec;
  v.rule = rule;
  v.notes = std::move(notes);
  return v;
}

Verdict not_realizable(const CharSpec& spec, RuleId rule, std::string notes = {}) {
  return make_verdict(Status::NotRealizable, spec, rule, std::move(notes));
}

Verdict unknown(const CharSpec& spec, RuleId rule, std::string notes = {}) {
  return make_verdict(Status::Unknown, spec, rule, std::move(notes));
}

void require_two_group(const AbelianType& g) {
  if (!g.is_p_group(2)) throw InputError("expected a 2-group, got " + g.to_string());
}

ExprPtr repeated(const ExprPtr& e, std::uint64_t count) {
  return make_product(std::vector<ExprPtr>(count, e));
}

std::uint64_t pow2(int e) {
  if (e < 0 || e > 63) throw InputError("2^" + std::to_string(e) + " exceeds 64 bits");
  return std::uint64_t{1} << e;
}

// 2^e + 1 is prime for e in {1, 2, 4, 8, 16}; for e <= 64 every other
// exponent gives a composite (2^32 + 1 = 641 * 6700417, 2^64 + 1 = 274177 *
// 67280421310721, and e with an odd factor > 1 gives an algebraic factor).
bool fermat_exponent(int e) { return e == 1 || e == 2 || e == 4 || e == 8 || e == 16; }

ExprPtr cyclic_odd_char_witness(int e) {
  if (e == 3) return make_gf(3, 2);
  return make_gf(pow2(e) + 1, 1);
}

const std::vector<AbelianType>& rank12_list() {
  static const std::vector<AbelianType> list = {
      AbelianType(),
      parse_abelian("C2"),
      parse_abelian("C4"),
      parse_abelian("C2xC2"),
      parse_abelian("C4xC2"),
      parse_abelian("C4xC4"),
      parse_abelian("C8xC2"),
  };
  return list;
}

bool in_rank12_list(const AbelianType& g) {
  const auto& l = rank12_list();
  return std::find(l.begin(), l.end(), g) != l.end();
}

struct Exclusion {
  RuleId rule;
  std::string detail;
};

std::optional<Exclusion> char2_exclusion(const AbelianType& g) {
  const int maxexp = g.max_exponent(2);
  for (int k = 0; k <= maxexp; ++k) {
    const AbelianType h = power_down(g, static_cast<unsigned>(k));
    const std::string prefix =
        k == 0 ? std::string() : "power " + std::to_string(k) + " image " + h.to_string() + ": ";
    const std::uint64_t r = h.rank();
    if (r <= 2) {
      if (!in_rank12_list(h)) {
        return Exclusion{k == 0 ? RuleId::Char2Rank12 : RuleId::Char2PowerDown,
                         prefix + "rank at most 2 and not in the realizable list"};
      }
      continue;
    }
    const int e = h.max_exponent(2);
    if (BigInt(1) << e > BigInt(4) * r) {
      return Exclusion{k == 0 ? RuleId::Char2RankLimit : RuleId::Char2PowerDown,
                       prefix + "element of order 2^" + std::to_string(e) + " exceeds 4 * rank " +
                           std::to_string(r)};
    }
    if (e >= 2) {
      int m = 0;
      for (int x : h.exponents(2)) m += x;
      if ((BigInt(1) << (e - 2)) + e - 1 > m) {
        return Exclusion{k == 0 ? RuleId::Char2OrderBound : RuleId::Char2PowerDown,
                         prefix + "2^(r-2) + r - 1 > m with r = " + std::to_string(e) +
                             ", m = " + std::to_string(m)};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> char2_cover(const AbelianType& g) {
  const auto& cat = char2_catalog();
  std::set<AbelianType> dead;
  std::vector<std::size_t> chosen;
  std::function<bool(const AbelianType&)> rec = [&](const AbelianType& rem) {
    if (rem.is_trivial()) return true;
    if (dead.count(rem) != 0) return false;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (cat[i].units.is_trivial()) continue;
      auto rest = remove_factors(rem, cat[i].units);
      if (!rest) continue;
      chosen.push_back(i);
      if (rec(*rest)) return true;
      chosen.pop_back();
    }
    dead.insert(rem);
    return false;
  };
  if (!rec(g)) return std::nullopt;
  return chosen;
}

// Abelian type with the given 2-exponent list.
AbelianType from_exponents(const std::vector<int>& exps) {
  std::vector<PrimePowerFactor> f;
  for (int e : exps) {
    if (e > 0) f.push_back({2, e, 1});
  }
  return AbelianType::from_factors(std::move(f));
}

std::optional<ExprPtr> char2n_core(const AbelianType& g, unsigned n) {
  const int n2 = static_cast<int>(n) - 2;
  AbelianType core = n2 == 0 ? parse_abelian("C2")
                             : from_exponents({1, n2});
  if (auto q = remove_factors(g, core)) {
    if (q->max_exponent(2) <= static_cast<int>(n)) {
      ExprPtr base = make_zn(pow2(static_cast<int>(n)));
      return q->is_trivial() ? base : make_triangular(base, *q);
    }
  }
  for (int k : {2 * static_cast<int>(n) - 1, 2 * static_cast<int>(n)}) {
    if (formulas::gaussian_quotient_units(k) == g) return make_gaussian_quotient(k);
  }
  return std::nullopt;
}

// Partitions of a descending exponent list into Gaussian module shapes.
bool gaussian_partition(std::vector<int> exps, std::vector<int>& ks) {
  if (exps.empty()) return true;
  const int a = exps.front();
  exps.erase(exps.begin());
  if (a == 1) {
    ks.push_back(1);
    if (gaussian_partition(exps, ks)) return true;
    ks.pop_back();
  }
  for (int partner : {a, a - 1}) {
    if (partner < 1) continue;
    auto it = std::find(exps.begin(), exps.end(), partner);
    if (it == exps.end()) continue;
    std::vector<int> rest(exps.begin(), it);
    rest.insert(rest.end(), it + 1, exps.end());
    ks.push_back(partner == a ? 2 * a : 2 * a - 1);
    if (gaussian_partition(rest, ks)) return true;
    ks.pop_back();
  }
  return false;
}

std::optional<GroupSpec> as_named_or_abelian(const GroupSpec& g) {
  if (const auto* ng = std::get_if<NamedGroup>(&g); ng && ng->is_abelian()) {
    return GroupSpec{ng->abelian_type()};
  }
  return g;
}

GroupSpec normalize(const GroupSpec& g) { return *as_named_or_abelian(g); }

std::optional<int> mersenne_k(std::uint64_t p) {
  if (!formulas::is_mersenne_prime(p)) return std::nullopt;
  return nt::exact_log(p + 1, 2);
}

std::uint64_t single_prime(const AbelianType& g) {
  auto ps = g.primes();
  if (ps.size() != 1) throw InputError("expected a nontrivial p-group, got " + g.to_string());
  return ps.front();
}

Verdict classify_nonabelian(const NamedGroup& g, const CharSpec& spec) {
  if (g.order() >= 16) {
    auto chk = nonabelian_necessary(g.center(), g.cyclic_maximal_abelian_orders());
    if (!chk.pass) return not_realizable(spec, *chk.rule, chk.detail);
  }
  const bool d8 = g.family() == GroupFamily::Dihedral && g.order() == 8;
  const bool q8 = g.family() == GroupFamily::GeneralizedQuaternion && g.order() == 8;
  if (!d8 && !q8) return unknown(spec, RuleId::NonabelianOpen);
  switch (spec.kind) {
    case CharSpec::Kind::Any:
      return d8 ? make_realizable(spec, make_upper_tri(2, 3), RuleId::AlmostCyclicList)
                : make_realizable(spec, make_infinite(node::InfiniteTag::LipschitzL),
                                  RuleId::AlmostCyclicList);
    case CharSpec::Kind::Odd:
      return not_realizable(spec, RuleId::NonabelianOddChar);
    case CharSpec::Kind::Zero:
      if (q8) {
        return make_realizable(spec, make_infinite(node::InfiniteTag::LipschitzL),
                               RuleId::AlmostCyclicList);
      }
      return unknown(spec, RuleId::NonabelianOpen);
    case CharSpec::Kind::TwoPower:
    case CharSpec::Kind::Equals: {
      std::uint64_t n = spec.kind == CharSpec::Kind::Equals ? spec.n : 0;
      if (spec.kind == CharSpec::Kind::Equals) {
        if (!formulas::admissible_characteristic(n)) {
          return not_realizable(spec, RuleId::CharInadmissible);
        }
        if (n % 2 == 1) return not_realizable(spec, RuleId::NonabelianOddChar);
        if (!nt::is_power_of_two(n)) return not_realizable(spec, RuleId::NonabelianIndecomposable);
      }
      const bool char2 = spec.kind == CharSpec::Kind::Equals ? n == 2 : spec.n == 1;
      if (d8 && char2) {
        return make_realizable(spec, make_upper_tri(2, 3), RuleId::AlmostCyclicList);
      }
      return unknown(spec, RuleId::NonabelianOpen);
    }
  }
  return unknown(spec, RuleId::NonabelianOpen);
}

Verdict classify_equals(const AbelianType& g, std::uint64_t n, const CharSpec& spec) {
  if (n == 1) throw InputError("characteristic 1 describes the zero ring");
  if (!formulas::admissible_characteristic(n)) {
    return not_realizable(spec, RuleId::CharInadmissible,
                          std::to_string(n) + " is not 2^a times distinct Fermat primes");
  }
  int a = 0;
  std::uint64_t odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++a;
  }
  std::vector<std::uint64_t> qs;
  for (auto [p, e] : nt::factorize(odd)) qs.push_back(p);

  auto two_part = [&](const AbelianType& rest) -> Verdict {
    if (a == 0) {
      if (rest.is_trivial()) {
        Verdict v;
        v.status = Status::Realizable;
        return v;
      }
      return not_realizable(spec, RuleId::FermatComponent,
                            "leftover " + rest.to_string() + " with no 2-primary part");
    }
    if (a == 1) return classify_char2(rest);
    return classify_char_2n(rest, static_cast<unsigned>(a));
  };

  if (qs.empty()) {
    Verdict v = two_part(g);
    v.spec = spec;
    return v;
  }

  struct Slot {
    std::uint64_t q;
    int e;
    std::uint64_t max;
  };
  std::vector<Slot> slots;
  for (auto q : qs) {
    std::vector<int> es = q == 3 ? std::vector<int>{1, 3}
                                 : std::vector<int>{*nt::exact_log(q - 1, 2)};
    for (int e : es) slots.push_back({q, e, g.multiplicity(2, e)});
  }
  std::vector<std::uint64_t> take(slots.size(), 0);
  bool any_unknown = false;
  std::vector<std::string> unknown_notes;
  std::size_t tried = 0;
  std::optional<Verdict> last_nr;

  std::function<std::optional<Verdict>(std::size_t)> rec =
      [&](std::size_t i) -> std::optional<Verdict> {
    if (i == slots.size()) {
      for (auto q : qs) {
        std::uint64_t total = 0;
        for (std::size_t j = 0; j < slots.size(); ++j) {
          if (slots[j].q == q) total += take[j];
        }
        if (total == 0) return std::nullopt;
      }
      std::vector<PrimePowerFactor> f;
      for (std::size_t j = 0; j < slots.size(); ++j) {
        if (take[j] > 0) f.push_back({2, slots[j].e, take[j]});
      }
      const AbelianType odd_part = AbelianType::from_factors(f);
      const AbelianType rest = *remove_factors(g, odd_part);
      ++tried;
      Verdict sub = two_part(rest);
      if (sub.status == Status::Realizable) {
        std::vector<ExprPtr> parts;
        if (a >= 1) parts.push_back(sub.witness);
        for (std::size_t j = 0; j < slots.size(); ++j) {
          if (take[j] == 0) continue;
          ExprPtr w = slots[j].e == 3 ? make_gf(3, 2) : make_gf(slots[j].q, 1);
          for (std::uint64_t c = 0; c < take[j]; ++c) parts.push_back(w);
        }
        return make_realizable(spec, make_product(parts),
                               a >= 1 ? sub.rule : RuleId::FermatComponent,
                               "odd components " + odd_part.to_string());
      }
      if (sub.status == Status::Unknown) {
        any_unknown = true;
        unknown_notes.push_back(rest.to_string() + " in characteristic 2^" + std::to_string(a));
      } else {
        last_nr = sub;
      }
      return std::nullopt;
    }
    for (std::uint64_t c = 0; c <= slots[i].max; ++c) {
      take[i] = c;
      if (auto v = rec(i + 1)) return v;
    }
    take[i] = 0;
    return std::nullopt;
  };
  if (auto v = rec(0)) return *v;
  if (any_unknown) {
    std::string notes = "undecided 2-primary parts:";
    for (const auto& s : unknown_notes) notes += " " + s + ";";
    return unknown(spec, RuleId::FermatComponent, notes);
  }
  if (tried == 1 && last_nr) {
    Verdict v = *last_nr;
    v.spec = spec;
    return v;
  }
  return not_realizable(spec, RuleId::FermatComponent,
                        tried == 0 ? "no cyclic factors available for every odd prime"
                                   : "every split of the odd components is excluded");
}

Verdict classify_any_two_group(const AbelianType& g, const CharSpec& spec) {
  const int maxexp = g.max_exponent(2);
  std::vector<std::uint64_t> fermat;
  for (std::uint64_t q : {3ull, 5ull, 17ull, 257ull, 65537ull}) {
    const int e = *nt::exact_log(q - 1, 2);
    if (g.multiplicity(2, e) > 0 || (q == 3 && g.multiplicity(2, 3) > 0)) fermat.push_back(q);
  }
  std::vector<std::uint64_t> chars;
  const int amax = std::min(maxexp + 2, 62);
  for (int a = 0; a <= amax; ++a) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fermat.size()); ++mask) {
      BigInt n = BigInt(1) << a;
      for (std::size_t i = 0; i < fermat.size(); ++i) {
        if ((mask >> i) & 1u) n *= fermat[i];
      }
      if (n == 1 || n > BigInt(std::numeric_limits<std::uint64_t>::max())) continue;
      chars.push_back(static_cast<std::uint64_t>(n));
    }
  }
  std::sort(chars.begin(), chars.end());
  std::vector<std::string> open;
  for (std::uint64_t n : chars) {
    Verdict v = classify_equals(g, n, CharSpec::equals(n));
    if (v.status == Status::Realizable) {
      v.spec = spec;
      return v;
    }
    if (v.status == Status::Unknown) open.push_back(std::to_string(n));
  }
  Verdict v0 = classify_char0(g);
  if (v0.status == Status::Realizable) {
    v0.spec = spec;
    return v0;
  }
  if (v0.status == Status::Unknown) open.push_back("0");
  if (open.empty()) {
    return not_realizable(spec, RuleId::AnyCombined,
                          "excluded in characteristic 0 and every admissible characteristic");
  }
  std::string notes = "undecided in characteristic";
  for (std::size_t i = 0; i < open.size(); ++i) notes += (i ? ", " : " ") + open[i];
  return unknown(spec, RuleId::AnyCombined, notes);
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Realizable:
      return "Realizable";
    case Status::NotRealizable:
      return "NotRealizable";
    case Status::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

CharSpec CharSpec::parse(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "any") return any();
  if (t == "odd") return odd();
  if (t == "0") return zero();
  auto parse_uint = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw InputError("malformed characteristic: " + std::string(text));
    }
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InputError("characteristic out of range: " + std::string(text));
    }
  };
  if (t.rfind("2^", 0) == 0) {
    const std::uint64_t e = parse_uint(t.substr(2));
    if (e == 0) throw InputError("characteristic 2^0 describes the zero ring");
    if (e > 63) throw InputError("characteristic exponent above 63: " + std::string(text));
    return two_power(e);
  }
  const std::uint64_t n = parse_uint(t);
  if (n == 1) throw InputError("characteristic 1 describes the zero ring");
  return equals(n);
}

std::string CharSpec::to_string() const {
  switch (kind) {
    case Kind::Any:
      return "any";
    case Kind::Zero:
      return "0";
    case Kind::Odd:
      return "odd";
    case Kind::TwoPower:
      return "2^" + std::to_string(n);
    case Kind::Equals:
      return std::to_string(n);
  }
  return "any";
}

std::string_view rule_name(RuleId r) { return info(r).name; }
std::string_view rule_citation(RuleId r) { return info(r).citation; }

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> rules = [] {
    std::vector<RuleId> out;
    for (const auto& i : kRules) out.push_back(i.id);
    return out;
  }();
  return rules;
}

std::string Verdict::char_text() const {
  if (status == Status::Realizable && witness) return std::to_string(witness_char);
  return spec.to_string();
}

NecessaryCheck nonabelian_necessary(const AbelianType& center,
                                    const std::vector<std::uint64_t>& cyclic_maximal_orders) {
  NecessaryCheck out;
  if (center.rank() == 1 && center.order() > 4) {
    out.pass = false;
    out.rule = RuleId::NonabelianCenter;
    out.detail = "cyclic center " + center.to_string() + " of order above 4";
    return out;
  }
  for (std::uint64_t o : cyclic_maximal_orders) {
    if (o > 4) {
      out.pass = false;
      out.rule = RuleId::NonabelianCyclicMaximal;
      out.detail = "cyclic maximal abelian subgroup of order " + std::to_string(o);
      return out;
    }
  }
  return out;
}

Verdict classify_odd_char(const AbelianType& g) {
  require_two_group(g);
  const CharSpec spec = CharSpec::odd();
  if (g.is_trivial()) return not_realizable(spec, RuleId::OddCharTrivial);
  std::vector<ExprPtr> parts;
  for (const auto& f : g.factors()) {
    if (f.exponent != 3 && !fermat_exponent(f.exponent)) {
      return not_realizable(spec, RuleId::OddCharForm,
                            "factor C_2^" + std::to_string(f.exponent) + ": 2^" +
                                std::to_string(f.exponent) + " + 1 is not a Fermat prime");
    }
    ExprPtr w = cyclic_odd_char_witness(f.exponent);
    for (std::uint64_t c = 0; c < f.count; ++c) parts.push_back(w);
  }
  return make_realizable(spec, make_product(parts), RuleId::OddCharForm);
}

Verdict classify_char2(const AbelianType& g) {
  require_two_group(g);
  const CharSpec spec = CharSpec::equals(2);
  if (g.is_trivial()) return make_realizable(spec, make_gf(2, 1), RuleId::Char2Rank12);
  if (auto ex = char2_exclusion(g)) return not_realizable(spec, ex->rule, ex->detail);
  if (auto cover = char2_cover(g)) {
    std::vector<ExprPtr> parts;
    for (std::size_t i : *cover) parts.push_back(char2_catalog()[i].ring);
    return make_realizable(spec, make_product(parts),
                           g.rank() <= 2 ? RuleId::Char2Rank12 : RuleId::Char2ProductCover);
  }
  return unknown(spec, RuleId::Char2Open);
}

Verdict classify_char_2n(const AbelianType& g, unsigned n) {
  if (n < 2) throw InputError("classify_char_2n needs n >= 2");
  require_two_group(g);
  const CharSpec spec = CharSpec::two_power(n);
  if (n > 63) throw InputError("characteristic 2^" + std::to_string(n) + " exceeds 64 bits");
  const AbelianType needed = n == 2 ? parse_abelian("C2") : from_exponents({1, static_cast<int>(n) - 2});
  if (!has_subgroup(g, needed)) {
    return not_realizable(spec, RuleId::Char2nSubgroup,
                          "no subgroup isomorphic to " + needed.to_string());
  }
  if (auto w = char2n_core(g, n)) {
    const bool gaussian = std::holds_alternative<node::GaussianQuotient>((*w)->node);
    return make_realizable(spec, *w, gaussian ? RuleId::Char2nGaussian : RuleId::Char2nMatrix);
  }
  // Split g = core x H with H realizable in characteristic 2 and holding every
  // factor of exponent above n.
  std::vector<int> big;
  std::vector<int> small;
  for (int e : g.exponents(2)) (e > static_cast<int>(n) ? big : small).push_back(e);
  std::map<int, std::uint64_t> small_counts;
  for (int e : small) ++small_counts[e];
  std::vector<std::pair<int, std::uint64_t>> choices(small_counts.begin(), small_counts.end());
  std::vector<std::uint64_t> take(choices.size(), 0);
  std::size_t budget = 4096;
  std::function<std::optional<Verdict>(std::size_t)> rec =
      [&](std::size_t i) -> std::optional<Verdict> {
    if (budget == 0) return std::nullopt;
    if (i == choices.size()) {
      --budget;
      std::vector<int> hexps = big;
      for (std::size_t j = 0; j < choices.size(); ++j) {
        for (std::uint64_t c = 0; c < take[j]; ++c) hexps.push_back(choices[j].first);
      }
      if (hexps.empty()) return std::nullopt;
      const AbelianType h = from_exponents(hexps);
      const AbelianType core = *remove_factors(g, h);
      auto cw = char2n_core(core, n);
      if (!cw) return std::nullopt;
      Verdict hv = classify_char2(h);
      if (hv.status != Status::Realizable) return std::nullopt;
      return make_realizable(spec, make_product({*cw, hv.witness}), RuleId::Char2nMatrix,
                             "split as " + core.to_string() + " x " + h.to_string());
    }
    for (std::uint64_t c = 0; c <= choices[i].second; ++c) {
      take[i] = c;
      if (auto v = rec(i + 1)) return v;
    }
    take[i] = 0;
    return std::nullopt;
  };
  if (auto v = rec(0)) return *v;
  return unknown(spec, RuleId::Char2nOpen);
}

Verdict classify_char0(const AbelianType& g) {
  require_two_group(g);
  const CharSpec spec = CharSpec::zero();
  const bool c2 = g.multiplicity(2, 1) > 0;
  const bool c4 = g.multiplicity(2, 2) > 0;
  if (!c2 && !c4) return not_realizable(spec, RuleId::Char0Summand);
  if (c2) {
    const AbelianType p = *remove_factors(g, parse_abelian("C2"));
    ExprPtr z = make_infinite(node::InfiniteTag::Z);
    return make_realizable(spec, p.is_trivial() ? z : make_triangular(z, p),
                           RuleId::Char0C2Module);
  }
  const AbelianType p = *remove_factors(g, parse_abelian("C4"));
  ExprPtr zi = make_infinite(node::InfiniteTag::GaussianZ);
  if (p.is_trivial()) return make_realizable(spec, zi, RuleId::Char0GaussianModule);
  std::vector<int> ks;
  if (gaussian_partition(p.exponents(2), ks)) {
    std::sort(ks.rbegin(), ks.rend());
    return make_realizable(spec, make_gaussian_triangular(zi, ks), RuleId::Char0GaussianModule);
  }
  return unknown(spec, RuleId::Char0Open);
}

Verdict classify_odd_p(const AbelianType& g, std::uint64_t p) {
  if (p % 2 == 0 || !nt::is_prime(p)) throw InputError("classify_odd_p needs an odd prime");
  if (!g.is_p_group(p)) {
    throw InputError(g.to_string() + " is not a " + std::to_string(p) + "-group");
  }
  const CharSpec spec = CharSpec::equals(2);
  if (g.is_trivial()) return make_realizable(spec, make_gf(2, 1), RuleId::OddPMersenne);
  if (!g.is_elementary_abelian()) {
    return not_realizable(spec, RuleId::OddPMersenne, g.to_string() + " is not elementary abelian");
  }
  auto k = mersenne_k(p);
  if (!k) return not_realizable(spec, RuleId::OddPMersenne, std::to_string(p) + " is not Mersenne");
  return make_realizable(spec, repeated(make_gf(2, *k), g.rank()), RuleId::OddPMersenne);
}

bool is_almost_cyclic(const GroupSpec& g) {
  const GroupSpec n = normalize(g);
  if (std::holds_alternative<NamedGroup>(n)) return true;
  const auto& a = std::get<AbelianType>(n);
  if (a.primes().size() != 1) return false;
  const auto exps = a.exponents(a.primes().front());
  return exps.size() == 1 || (exps.size() == 2 && exps[1] == 1);
}

Verdict classify_almost_cyclic(const GroupSpec& input) {
  if (!is_almost_cyclic(input)) {
    throw InputError(to_string(input) + " is not almost cyclic");
  }
  const CharSpec spec = CharSpec::any();
  const GroupSpec g = normalize(input);
  if (const auto* ng = std::get_if<NamedGroup>(&g)) {
    Verdict v = classify_nonabelian(*ng, spec);
    if (v.status == Status::Unknown) throw Error("nonabelian almost cyclic group left open");
    if (v.status == Status::Realizable) v.rule = RuleId::AlmostCyclicList;
    return v;
  }
  const auto& a = std::get<AbelianType>(g);
  const std::uint64_t p = single_prime(a);
  const auto exps = a.exponents(p);
  if (p == 2) {
    if (exps.size() == 1) {
      const int e = exps[0];
      if (e == 3 || fermat_exponent(e)) {
        return make_realizable(spec, cyclic_odd_char_witness(e), RuleId::AlmostCyclicList);
      }
      return not_realizable(spec, RuleId::AlmostCyclicList,
                            "cyclic of order 2^" + std::to_string(e) + " is not in the list");
    }
    return make_realizable(
        spec,
        make_triangular(make_infinite(node::InfiniteTag::Z), AbelianType::cyclic_prime_power(2, exps[0])),
        RuleId::AlmostCyclicList);
  }
  auto k = mersenne_k(p);
  if (!k) return not_realizable(spec, RuleId::AlmostCyclicList, std::to_string(p) + " is not Mersenne");
  if (exps[0] != 1) {
    return not_realizable(spec, RuleId::AlmostCyclicList, a.to_string() + " is not elementary abelian");
  }
  return make_realizable(spec, repeated(make_gf(2, *k), exps.size()), RuleId::AlmostCyclicList);
}

Verdict classify_periodic_cohomology(const GroupSpec& input) {
  const GroupSpec g = normalize(input);
  bool ok = false;
  if (const auto* ng = std::get_if<NamedGroup>(&g)) {
    ok = ng->family() == GroupFamily::GeneralizedQuaternion;
  } else {
    const auto& a = std::get<AbelianType>(g);
    ok = a.primes().size() == 1 && a.rank() == 1;
  }
  if (!ok) {
    throw InputError(to_string(input) + " is neither cyclic nor generalized quaternion");
  }
  Verdict v = classify_almost_cyclic(g);
  v.rule = RuleId::PeriodicCohomologyList;
  return v;
}

Verdict classify_order_p3(const GroupSpec& input) {
  const GroupSpec g = normalize(input);
  const CharSpec spec = CharSpec::any();
  if (const auto* ng = std::get_if<NamedGroup>(&g)) {
    if (ng->order() != 8) throw InputError(ng->to_string() + " does not have order p^3");
    Verdict v = classify_nonabelian(*ng, spec);
    v.rule = RuleId::OrderP3List;
    return v;
  }
  const auto& a = std::get<AbelianType>(g);
  const auto ps = a.primes();
  int total = 0;
  if (ps.size() == 1) {
    for (int e : a.exponents(ps.front())) total += e;
  }
  if (ps.size() != 1 || total != 3) throw InputError(a.to_string() + " does not have order p^3");
  const std::uint64_t p = ps.front();
  const auto exps = a.exponents(p);
  if (p == 2) {
    if (exps == std::vector<int>{2, 1}) {
      return make_realizable(spec, make_trunc_poly(2, {4}), RuleId::OrderP3List);
    }
    if (exps == std::vector<int>{3}) return make_realizable(spec, make_gf(3, 2), RuleId::OrderP3List);
    return make_realizable(spec, repeated(make_trunc_poly(2, {2}), 3), RuleId::OrderP3List);
  }
  auto k = mersenne_k(p);
  if (exps == std::vector<int>{1, 1, 1} && k) {
    return make_realizable(spec, repeated(make_gf(2, *k), 3), RuleId::OrderP3List);
  }
  return not_realizable(spec, RuleId::OrderP3List, a.to_string() + " is not in the list");
}

Verdict classify(const GroupSpec& input, const CharSpec& spec) {
  const GroupSpec g = normalize(input);
  if (const auto* ng = std::get_if<NamedGroup>(&g)) {
    if (spec.kind == CharSpec::Kind::TwoPower && spec.n == 0) {
      throw InputError("characteristic 2^0 describes the zero ring");
    }
    if (spec.kind == CharSpec::Kind::Equals && spec.n == 1) {
      throw InputError("characteristic 1 describes the zero ring");
    }
    CharSpec s = spec;
    if (s.kind == CharSpec::Kind::Equals && s.n == 0) s = CharSpec::zero();
    Verdict v = classify_nonabelian(*ng, s);
    v.spec = spec;
    return v;
  }
  const auto& a = std::get<AbelianType>(g);
  const auto ps = a.primes();
  if (ps.size() > 1) throw InputError("mixed-order abelian groups are not supported: " + a.to_string());
  if (!a.is_p_group(2)) {
    const std::uint64_t p = ps.front();
    const bool char2 = (spec.kind == CharSpec::Kind::Equals && spec.n == 2) ||
                       (spec.kind == CharSpec::Kind::TwoPower && spec.n == 1);
    if (spec.kind == CharSpec::Kind::Any || char2) {
      Verdict v = classify_odd_p(a, p);
      v.spec = spec;
      return v;
    }
    if (spec.kind == CharSpec::Kind::Equals && spec.n == 1) {
      throw InputError("characteristic 1 describes the zero ring");
    }
    return not_realizable(spec, RuleId::OddPMersenne, "odd p-groups occur only in characteristic 2");
  }
  switch (spec.kind) {
    case CharSpec::Kind::Any:
      return classify_any_two_group(a, spec);
    case CharSpec::Kind::Zero:
      return classify_char0(a);
    case CharSpec::Kind::Odd:
      return classify_odd_char(a);
    case CharSpec::Kind::TwoPower: {
      if (spec.n == 0) throw InputError("characteristic 2^0 describes the zero ring");
      Verdict v = spec.n == 1 ? classify_char2(a)
                              : classify_char_2n(a, static_cast<unsigned>(spec.n));
      v.spec = spec;
      return v;
    }
    case CharSpec::Kind::Equals:
      if (spec.n == 0) return classify_char0(a);
      return classify_equals(a, spec.n, spec);
  }
  throw InputError("malformed characteristic specification");
}

std::optional<GroupSpec> formula_unit_group(const ConstructionExpr& e) {
  return std::visit(
      [&](const auto& n) -> std::optional<GroupSpec> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Zn>) {
          return GroupSpec{formulas::zn_units(n.n)};
        } else if constexpr (std::is_same_v<T, node::GF>) {
          auto q = nt::checked_pow(n.p, static_cast<unsigned>(n.k));
          if (!q) return std::nullopt;
          return GroupSpec{AbelianType::cyclic(*q - 1)};
        } else if constexpr (std::is_same_v<T, node::GR>) {
          return GroupSpec{formulas::galois_ring_units(n.p, n.n, n.lambda)};
        } else if constexpr (std::is_same_v<T, node::TruncPoly>) {
          if (n.exponents.size() != 1) return std::nullopt;
          return GroupSpec{formulas::truncated_poly_units(n.p, static_cast<std::uint64_t>(n.exponents[0]))};
        } else if constexpr (std::is_same_v<T, node::UpperTri>) {
          if (n.size == 1) return GroupSpec{AbelianType::cyclic(n.p - 1)};
          if (n.p == 2 && n.size == 2) return GroupSpec{parse_abelian("C2")};
          if (n.p == 2 && n.size == 3) return GroupSpec{NamedGroup(GroupFamily::Dihedral, 8)};
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          AbelianType acc;
          std::optional<NamedGroup> named;
          for (const auto& ch : n.children) {
            auto u = formula_unit_group(*ch);
            if (!u) return std::nullopt;
            if (const auto* ng = std::get_if<NamedGroup>(&*u)) {
              if (named) return std::nullopt;
              named = *ng;
            } else {
              acc = product(acc, std::get<AbelianType>(*u));
            }
          }
          if (named) {
            if (!acc.is_trivial()) return std::nullopt;
            return GroupSpec{*named};
          }
          return GroupSpec{acc};
        } else if constexpr (std::is_same_v<T, node::Triangular>) {
          auto base = formula_unit_group(*n.base);
          if (!base || !std::holds_alternative<AbelianType>(*base)) return std::nullopt;
          AbelianType module;
          if (const auto* m = std::get_if<AbelianType>(&n.module)) {
            module = *m;
          } else {
            for (int k : std::get<node::GaussianModules>(n.module).ks) {
              module = product(module, formulas::gaussian_module_additive(k));
            }
          }
          return GroupSpec{product(std::get<AbelianType>(*base), module)};
        } else if constexpr (std::is_same_v<T, node::GaussianQuotient>) {
          return GroupSpec{formulas::gaussian_quotient_units(n.n)};
        } else if constexpr (std::is_same_v<T, node::SymbolicInfinite>) {
          switch (n.tag) {
            case node::InfiniteTag::Z:
              return GroupSpec{parse_abelian("C2")};
            case node::InfiniteTag::GaussianZ:
              return GroupSpec{parse_abelian("C4")};
            case node::InfiniteTag::LipschitzL:
              return GroupSpec{NamedGroup(GroupFamily::GeneralizedQuaternion, 8)};
          }
          return std::nullopt;
        } else {
          return std::nullopt;
        }
      },
      e.node);
}

namespace {

// Unit group of a witness, by brute force where the ring fits under the cap
// and by formula otherwise; products are handled factor by factor.
std::optional<GroupSpec> checked_units(const ConstructionExpr& w, const Limits& limits) {
  if (const auto* p = std::get_if<node::Product>(&w.node)) {
    AbelianType acc;
    std::optional<NamedGroup> named;
    for (const auto& ch : p->children) {
      auto u = checked_units(*ch, limits);
      if (!u) return std::nullopt;
      if (const auto* ng = std::get_if<NamedGroup>(&*u)) {
        if (named) return std::nullopt;
        named = *ng;
      } else {
        acc = product(acc, std::get<AbelianType>(*u));
      }
    }
    if (!named) return GroupSpec{acc};
    if (!acc.is_trivial()) return std::nullopt;
    return GroupSpec{*named};
  }
  if (is_finite(w)) {
    try {
      const UnitGroupReport rep = unit_group_report(build_ring(w, limits));
      if (rep.abelian) return GroupSpec{*rep.abelian_type};
      if (rep.identified) return GroupSpec{*rep.identified};
      return std::nullopt;
    } catch (const CapExceeded&) {
    }
  }
  auto f = formula_unit_group(w);
  if (!f) return std::nullopt;
  return normalize(*f);
}

}  // namespace

std::string self_verify(const Verdict& v, const GroupSpec& input, const Limits& limits) {
  if (v.status != Status::Realizable) return {};
  if (!v.witness) return "realizable verdict without a witness";
  const GroupSpec g = normalize(input);
  auto u = checked_units(*v.witness, limits);
  if (!u) return "unit group of " + to_string(v.witness) + " could not be determined";
  if (*u == g) return {};
  return "units of " + to_string(v.witness) + " are " + to_string(*u) + ", expected " +
         to_string(g);
}

const std::vector<CatalogEntry>& char2_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (int n = 32; n >= 2; --n) {
      out.push_back({formulas::truncated_poly_units(2, static_cast<std::uint64_t>(n)),
                     make_trunc_poly(2, {n})});
    }
    Limits limits;
    for (int a = 2; a <= 12; ++a) {
      for (int b = 2; b <= a && a * b <= 12; ++b) {
        ExprPtr ring = make_trunc_poly(2, {a, b});
        const UnitGroupReport rep = unit_group_report(build_ring(*ring, limits));
        out.push_back({*rep.abelian_type, ring});
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
      return x.units.order() > y.units.order();
    });
    return out;
  }();
  return catalog;
}

}  // namespace unitforge
