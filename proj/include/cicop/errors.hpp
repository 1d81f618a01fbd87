// Copyright 2026 The cicopula Authors.
//
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

#ifndef CICOP_ERRORS_HPP_
#define CICOP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cicop {

/// Raised when a model description (file or programmatic) fails validation.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation fails numerically (lost bracket, non-finite
/// integrand, vanishing denominator, size limits of exact algorithms).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cicop

#endif  // CICOP_ERRORS_HPP_
