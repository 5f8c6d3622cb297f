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
#include <stdexcept>
#include <string>

namespace unitforge {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// A candidate 2^(2^k)+1 beyond the configured Fermat table was queried.
// Kept distinct so callers can tell "unknown to mathematics" from "false".
class UnknownFermatCandidate : public InputError {
 public:
  explicit UnknownFermatCandidate(std::uint64_t q)
      : InputError("Fermat status of " + std::to_string(q) +
                   " is outside the configured table"),
        candidate_(q) {}
  std::uint64_t candidate() const noexcept { return candidate_; }

 private:
  std::uint64_t candidate_;
};

// Exhaustive work would exceed the configured ring-order cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : Error(what + ": size " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

}  // namespace unitforge
