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

#include <cctype>
#include <charconv>

#include "unitforge/construction.hpp"
#include "unitforge/error.hpp"
#include "unitforge/number_theory.hpp"

namespace unitforge {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::uint64_t number() {
    skip_space();
    std::uint64_t v = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }
  int small_number() {
    const std::uint64_t v = number();
    if (v > 1'000'000) fail("number too large");
    return static_cast<int>(v);
  }
  // Raw text up to the next top-level character from `stops`.
  std::string_view until(std::string_view stops) {
    skip_space();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    std::string_view out = text_.substr(start, pos_ - start);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.remove_suffix(1);
    return out;
  }
  char next() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("ring expression: " + msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(strip_spaces(s.substr(start, i - start)));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

ExprPtr parse_expr(Cursor& c);

std::vector<int> parse_gaussian_modules(std::string_view text) {
  std::vector<int> ks;
  const std::string s = strip_spaces(text);
  std::size_t pos = 0;
  const std::string prefix = "Z[i]/(1+i)^";
  while (pos < s.size()) {
    if (s.compare(pos, prefix.size(), prefix) != 0) {
      throw InputError("Gaussian module must read Z[i]/(1+i)^k: '" + s + "'");
    }
    pos += prefix.size();
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) throw InputError("Gaussian module exponent missing: '" + s + "'");
    ks.push_back(std::stoi(s.substr(pos, end - pos)));
    pos = end;
    if (pos < s.size()) {
      if (s[pos] != '+') throw InputError("Gaussian modules are joined by '+': '" + s + "'");
      ++pos;
    }
  }
  return ks;
}

// After "F<p>[": either variables followed by "]/(...)" or a group then "]".
ExprPtr parse_f_prefixed(Cursor& c, std::uint64_t p) {
  const std::string_view inside = c.until("]");
  c.expect("]");
  if (!c.accept("/")) {
    return make_group_algebra(p, parse_group(inside));
  }
  std::vector<std::string> vars = split_top(inside);
  for (const auto& v : vars) {
    if (v.size() != 1 || !std::isalpha(static_cast<unsigned char>(v[0]))) {
      c.fail("variables must be single letters");
    }
  }
  c.expect("(");
  const std::string_view body = c.until(")");
  c.expect(")");
  std::vector<std::string> rels = split_top(body);
  std::vector<int> exps(vars.size(), 0);
  std::vector<std::string> extra;
  for (const auto& rel : rels) {
    bool used = false;
    for (std::size_t i = 0; i < vars.size() && !used; ++i) {
      if (exps[i] != 0 || rel.empty() || rel.substr(0, 1) != vars[i]) continue;
      if (rel.size() == 1) {
        exps[i] = 1;
        used = true;
      } else if (rel[1] == '^' && rel.size() > 2 &&
                 rel.find_first_not_of("0123456789", 2) == std::string::npos) {
        exps[i] = std::stoi(rel.substr(2));
        used = exps[i] > 0;
      }
    }
    if (!used) extra.push_back(rel);
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (exps[i] == 0) c.fail("variable " + vars[i] + " needs a relation " + vars[i] + "^a");
  }
  ExprPtr base = std::make_shared<const ConstructionExpr>(
      ConstructionExpr{node::TruncPoly{p, exps, vars}});
  if (extra.empty()) return base;
  return make_quotient(base, extra);
}

ExprPtr parse_atom(Cursor& c) {
  if (c.accept("(")) {
    ExprPtr e = parse_expr(c);
    c.expect(")");
    return e;
  }
  if (c.accept("quot(")) {
    ExprPtr base = parse_expr(c);
    c.expect(";");
    const std::string_view body = c.until(")");
    c.expect(")");
    return make_quotient(base, split_top(body));
  }
  if (c.accept("M(")) {
    ExprPtr base = parse_expr(c);
    c.expect(",");
    const std::string_view mod = c.until(")");
    c.expect(")");
    if (mod.substr(0, 4) == "Z[i]") return make_gaussian_triangular(base, parse_gaussian_modules(mod));
    return make_triangular(base, parse_abelian(mod));
  }
  if (c.accept("GF[")) {
    const std::uint64_t p = c.number();
    c.expect(",");
    const int k = c.small_number();
    c.expect("]");
    return make_gf(p, k);
  }
  if (c.accept("GR[")) {
    const std::uint64_t p = c.number();
    c.expect(",");
    const int n = c.small_number();
    c.expect(",");
    const int l = c.small_number();
    c.expect("]");
    return make_gr(p, n, l);
  }
  if (c.accept("U")) {
    const int size = c.small_number();
    c.expect("[");
    c.expect("F");
    const std::uint64_t p = c.number();
    c.expect("]");
    return make_upper_tri(p, size);
  }
  if (c.accept("F")) {
    const std::uint64_t p = c.number();
    c.expect("[");
    return parse_f_prefixed(c, p);
  }
  if (c.accept("Z[i]")) {
    if (c.accept("/")) {
      c.expect("(");
      c.expect("1");
      c.expect("+");
      c.expect("i");
      c.expect(")");
      c.expect("^");
      return make_gaussian_quotient(c.small_number());
    }
    return make_infinite(node::InfiniteTag::GaussianZ);
  }
  if (c.accept("Z[")) {
    const std::uint64_t n = c.number();
    c.expect("]");
    return make_zn(n);
  }
  if (c.accept("Z")) return make_infinite(node::InfiniteTag::Z);
  if (c.accept("L")) return make_infinite(node::InfiniteTag::LipschitzL);
  c.fail("unknown ring");
}

ExprPtr parse_expr(Cursor& c) {
  std::vector<ExprPtr> parts{parse_atom(c)};
  while (c.accept("*")) parts.push_back(parse_atom(c));
  return make_product(std::move(parts));
}

class PolyParser {
 public:
  PolyParser(const Ring& r, std::string_view text) : r_(r), c_(text) {}

  Element run() {
    Element e = sum();
    if (!c_.at_end()) c_.fail("trailing input in polynomial");
    return e;
  }

 private:
  Element sum() {
    bool negate = c_.accept("-");
    Element acc = term();
    if (negate) acc = r_.neg(acc);
    for (;;) {
      if (c_.accept("+")) {
        acc = r_.add(acc, term());
      } else if (c_.accept("-")) {
        acc = r_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }
  Element term() {
    Element acc = factor();
    for (;;) {
      c_.accept("*");
      const char n = c_.peek();
      if (n == '(' || std::isalnum(static_cast<unsigned char>(n))) {
        acc = r_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }
  Element factor() {
    Element base = primary();
    while (c_.accept("^")) base = r_.pow(base, c_.number());
    return base;
  }
  Element primary() {
    const char n = c_.peek();
    if (n == '(') {
      c_.next();
      Element e = sum();
      c_.expect(")");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(n))) {
      return r_.scale(r_.one(), c_.number() % r_.characteristic());
    }
    if (std::isalpha(static_cast<unsigned char>(n))) {
      const std::string name(1, c_.next());
      auto s = r_.symbol(name);
      if (!s) c_.fail("unknown symbol '" + name + "'");
      return *s;
    }
    c_.fail("expected a polynomial term");
  }

  const Ring& r_;
  Cursor c_;
};

}  // namespace

ExprPtr parse_ring(std::string_view text) {
  Cursor c(text);
  ExprPtr e = parse_expr(c);
  if (!c.at_end()) c.fail("trailing input");
  return e;
}

Element parse_element(const Ring& r, std::string_view text) {
  return PolyParser(r, text).run();
}

}  // namespace unitforge
