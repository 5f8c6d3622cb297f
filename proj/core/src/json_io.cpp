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

#include "unitforge/json_io.hpp"

#include <json.hpp>

#include "unitforge/error.hpp"

namespace unitforge {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t as_u64(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw InputError(std::string("presentation field ") + what + " must hold nonnegative integers");
  }
  return j.get<std::uint64_t>();
}

Element as_element(const nlohmann::json& j, std::size_t m, const char* what) {
  if (!j.is_array() || j.size() != m) {
    throw InputError(std::string("presentation field ") + what + " must be an array of length " +
                     std::to_string(m));
  }
  Element e;
  for (const auto& x : j) e.push_back(as_u64(x, what));
  return e;
}

}  // namespace

std::string presentation_to_json(const RingPresentation& p, int indent) {
  Json j;
  j["char"] = p.characteristic;
  j["add_orders"] = p.additive_orders;
  j["one"] = p.one;
  j["mul"] = p.mul;
  j["commutative"] = p.commutative;
  return j.dump(indent);
}

RingPresentation presentation_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed presentation JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("presentation JSON must be an object");
  for (const char* key : {"char", "add_orders", "one", "mul", "commutative"}) {
    if (!j.contains(key)) throw InputError(std::string("presentation JSON lacks \"") + key + "\"");
  }
  RingPresentation p;
  p.characteristic = as_u64(j["char"], "char");
  if (!j["add_orders"].is_array()) throw InputError("presentation field add_orders must be an array");
  for (const auto& d : j["add_orders"]) p.additive_orders.push_back(as_u64(d, "add_orders"));
  const std::size_t m = p.additive_orders.size();
  p.one = as_element(j["one"], m, "one");
  const auto& mul = j["mul"];
  if (!mul.is_array() || mul.size() != m) {
    throw InputError("presentation field mul must be an m x m array of elements");
  }
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != m) {
      throw InputError("presentation field mul must be an m x m array of elements");
    }
    std::vector<Element> r;
    for (const auto& e : row) r.push_back(as_element(e, m, "mul"));
    p.mul.push_back(std::move(r));
  }
  if (!j["commutative"].is_boolean()) throw InputError("presentation field commutative must be a boolean");
  p.commutative = j["commutative"].get<bool>();
  return p;
}

std::string report_to_json(const UnitGroupReport& r, int indent) {
  Json j;
  j["order"] = r.order;
  j["abelian"] = r.abelian;
  j["abelian_type"] = r.abelian_type ? Json(r.abelian_type->to_string()) : Json(nullptr);
  Json hist = Json::object();
  for (const auto& [o, c] : r.order_histogram) hist[std::to_string(o)] = c;
  j["histogram"] = hist;
  j["center_order"] = r.center_order ? Json(*r.center_order) : Json(nullptr);
  j["identified"] = r.identified ? Json(r.identified->to_string()) : Json(nullptr);
  return j.dump(indent);
}

std::string verdict_to_json(const Verdict& v, int indent) {
  Json j;
  j["status"] = status_name(v.status);
  j["char"] = v.char_text();
  j["witness"] = v.witness ? Json(to_string(v.witness)) : Json(nullptr);
  j["rule"] = rule_name(v.rule);
  j["citation"] = rule_citation(v.rule);
  j["notes"] = v.notes;
  return j.dump(indent);
}

std::string suite_to_json(const SuiteReport& r, bool with_timing, int indent) {
  Json j;
  j["suite"] = r.suite;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj;
    cj["desc"] = c.desc;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["pass"] = c.pass;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["pass"] = r.pass;
  j["ms"] = with_timing ? r.ms : 0;
  return j.dump(indent);
}

}  // namespace unitforge
