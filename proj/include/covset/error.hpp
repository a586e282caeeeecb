// Copyright 2026 The covset Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVSET_ERROR_HPP
#define COVSET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace covset {

// Mirrors the status codes of the C API (covset.h); keep the two in sync.
enum class ErrorCode {
  invalid_argument = 1,
  out_of_range = 2,
  not_invertible = 3,
  modulus_mismatch = 4,
  limit_exceeded = 5,
  no_bound = 6,
  parse_error = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covset

#endif  // COVSET_ERROR_HPP
