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

#ifndef CICOP_PERMANENT_HPP_
#define CICOP_PERMANENT_HPP_

#include <Eigen/Dense>

namespace cicop {

/// Exact permanent by Ryser's inclusion-exclusion with Gray-code column
/// updates and compensated summation. Square matrices of order 1..20 with
/// finite entries; larger orders are refused (NumericError).
double permanent(const Eigen::MatrixXd& a);

/// Brute-force sum over all permutations; the test oracle for the Ryser
/// route. Order 1..8.
double permanent_naive(const Eigen::MatrixXd& a);

}  // namespace cicop

#endif  // CICOP_PERMANENT_HPP_
