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

inline constexpr std::uint64_t kDefaultRingOrderCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxRingOrderCap = std::uint64_t{1} << 40;

// Bounds on exhaustive work. Every enumeration checks against ring_order_cap.
struct Limits {
  std::uint64_t ring_order_cap = kDefaultRingOrderCap;

  // Reads UNITFORGE_CAP when set; falls back to the default otherwise.
  // Throws InputError on a malformed or out-of-range value.
  static Limits from_environment();
};

// Known Fermat primes and the Mersenne search bound.
struct FermatMersenneTable {
  std::vector<std::uint64_t> fermat{3, 5, 17, 257, 65537};
  std::uint64_t mersenne_bound = 2147483647;  // 2^31 - 1
};

}  // namespace unitforge
