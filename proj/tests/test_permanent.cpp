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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <doctest.h>

#include "cicop/errors.hpp"
#include "cicop/permanent.hpp"

using namespace cicop;

TEST_CASE("pinned small permanents") {
  Eigen::MatrixXd two(2, 2);
  two << 1, 2, 3, 4;
  CHECK(permanent(two) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(permanent_naive(two) == doctest::Approx(10.0).epsilon(1e-15));

  CHECK(permanent(Eigen::MatrixXd::Ones(3, 3)) ==
        doctest::Approx(6.0).epsilon(1e-15));
  for (int n : {1, 2, 5, 9}) {
    CHECK(permanent(Eigen::MatrixXd::Identity(n, n)) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }

  Eigen::MatrixXd one(1, 1);
  one << 0.37;
  CHECK(permanent(one) == doctest::Approx(0.37).epsilon(1e-15));

  Eigen::MatrixXd zero_row = Eigen::MatrixXd::Ones(4, 4);
  zero_row.row(2).setZero();
  CHECK(permanent(zero_row) == 0.0);
}

TEST_CASE("Ryser agrees with the naive enumeration") {
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = unif(rng);
    const double fast = permanent(a);
    const double slow = permanent_naive(a);
    CHECK(std::abs(fast - slow) <= 1e-12 * std::max(1.0, std::abs(slow)));
  }
}

TEST_CASE("permanent is invariant under row and column permutations") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::MatrixXd a(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a(i, j) = unif(rng);
  const double reference = permanent(a);
  std::vector<int> rows(6), cols(6);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  for (int rep = 0; rep < 10; ++rep) {
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    Eigen::MatrixXd b(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        b(i, j) = a(rows[static_cast<std::size_t>(i)],
                    cols[static_cast<std::size_t>(j)]);
      }
    CHECK(permanent(b) == doctest::Approx(reference).epsilon(1e-12));
  }
}

TEST_CASE("permanent is multilinear in rows") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::MatrixXd a(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) a(i, j) = unif(rng);
  const double reference = permanent(a);
  for (int row = 0; row < 5; ++row) {
    Eigen::MatrixXd scaled = a;
    scaled.row(row) *= 2.5;
    CHECK(permanent(scaled) == doctest::Approx(2.5 * reference).epsilon(1e-12));
  }
}

TEST_CASE("size limits are enforced") {
  CHECK_THROWS_AS(permanent(Eigen::MatrixXd::Ones(21, 21)), NumericError);
  CHECK_THROWS_AS(permanent_naive(Eigen::MatrixXd::Ones(9, 9)), NumericError);
  CHECK_THROWS_AS(permanent(Eigen::MatrixXd::Ones(2, 3)), std::invalid_argument);
  Eigen::MatrixXd nan_entry = Eigen::MatrixXd::Ones(2, 2);
  nan_entry(0, 0) = std::nan("");
  CHECK_THROWS_AS(permanent(nan_entry), std::invalid_argument);
}
