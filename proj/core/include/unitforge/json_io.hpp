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

#include <string>
#include <string_view>

#include "unitforge/classify.hpp"
#include "unitforge/ring.hpp"
#include "unitforge/units.hpp"
#include "unitforge/verify.hpp"

namespace unitforge {

// {"char", "add_orders", "one", "mul", "commutative"}.
std::string presentation_to_json(const RingPresentation& p, int indent = -1);
// Throws InputError on malformed JSON or a shape mismatch. The result is not
// validated; construct a Ring for that.
RingPresentation presentation_from_json(std::string_view text);

// {"order", "abelian", "abelian_type", "histogram", "center_order", "identified"}.
std::string report_to_json(const UnitGroupReport& r, int indent = -1);

// {"status", "char", "witness", "rule", "citation", "notes"}.
std::string verdict_to_json(const Verdict& v, int indent = -1);

// {"suite", "cases": [{"desc", "expected", "observed", "pass"}], "pass", "ms"}.
// Without timing "ms" is written as 0 so equal reports serialize identically.
std::string suite_to_json(const SuiteReport& r, bool with_timing = true, int indent = -1);

}  // namespace unitforge
