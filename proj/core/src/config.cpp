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

#include <cstdlib>
#include <string>

#include "unitforge/config.hpp"
#include "unitforge/error.hpp"

namespace unitforge {

Limits Limits::from_environment() {
  Limits limits;
  const char* raw = std::getenv("UNITFORGE_CAP");
  if (raw == nullptr || *raw == '\0') return limits;
  std::string text(raw);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw InputError("UNITFORGE_CAP is not a number: " + text);
  }
  if (used != text.size() || value == 0 || value > kMaxRingOrderCap) {
    throw InputError("UNITFORGE_CAP out of range: " + text);
  }
  limits.ring_order_cap = value;
  return limits;
}

}  // namespace unitforge
