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

#include "cicop/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cicop/errors.hpp"

namespace cicop {

namespace {

void require_square_finite(const Eigen::MatrixXd& a, int max_order,
                           const char* where) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw std::invalid_argument(std::string(where) +
                                ": matrix must be square, order >= 1");
  }
  if (a.rows() > max_order) {
    throw NumericError(std::string(where) + ": order " +
                       std::to_string(a.rows()) + " exceeds the limit of " +
                       std::to_string(max_order));
  }
  if (!a.allFinite()) {
    throw std::invalid_argument(std::string(where) +
                                ": entries must be finite");
  }
}

}  // namespace

double permanent(const Eigen::MatrixXd& a) {
  require_square_finite(a, 20, "permanent");
  const int n = static_cast<int>(a.rows());

  // Per(A) = (-1)^n sum over nonempty column subsets S of
  //          (-1)^|S| prod_i sum_{j in S} a(i,j)
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(n);
  double sum = 0.0, comp = 0.0;  // Kahan accumulator
  std::uint32_t gray = 0;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const std::uint32_t flipped = gray ^ next;
    const int j = std::countr_zero(flipped);
    if (next & flipped) {
      row_sums += a.col(j);
    } else {
      row_sums -= a.col(j);
    }
    gray = next;

    double prod = row_sums.prod();
    if ((n - std::popcount(gray)) & 1) prod = -prod;
    const double y = prod - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double permanent_naive(const Eigen::MatrixXd& a) {
  require_square_finite(a, 8, "permanent_naive");
  const int n = static_cast<int>(a.rows());
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  double sum = 0.0;
  do {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= a(i, cols[static_cast<std::size_t>(i)]);
    sum += prod;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return sum;
}

}  // namespace cicop
