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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "cicop/copulas.hpp"
#include "cicop/numerics.hpp"

using namespace cicop;

namespace {

std::vector<BivariateCopula> builtin_fixtures() {
  return {BivariateCopula::independence(), BivariateCopula::fgm(1.0),
          BivariateCopula::fgm(-0.7), BivariateCopula::clayton(2.0)};
}

}  // namespace

TEST_CASE("construction validates parameters") {
  CHECK_THROWS_WITH_AS(BivariateCopula::fgm(2.0),
                       "fgm: alpha must lie in [-1,1]", std::invalid_argument);
  CHECK_THROWS_AS(BivariateCopula::fgm(-1.5), std::invalid_argument);
  CHECK_THROWS_AS(BivariateCopula::clayton(0.0), std::invalid_argument);
  CHECK_THROWS_AS(BivariateCopula::clayton(-2.0), std::invalid_argument);
  CHECK_NOTHROW(BivariateCopula::fgm(-1.0));
  CHECK_NOTHROW(BivariateCopula::clayton(0.5));
}

TEST_CASE("cdf pinned values") {
  CHECK(copula_cdf(BivariateCopula::fgm(1.0), 0.5, 0.5) ==
        doctest::Approx(0.3125).epsilon(1e-14));
  CHECK(copula_cdf(BivariateCopula::independence(), 0.3, 0.7) ==
        doctest::Approx(0.21).epsilon(1e-14));
  for (const auto& cop : builtin_fixtures()) {
    for (int i = 0; i <= 10; ++i) {
      const double u = i / 10.0;
      CHECK(std::abs(copula_cdf(cop, u, 1.0) - u) <= 1e-14);
      CHECK(std::abs(copula_cdf(cop, 1.0, u) - u) <= 1e-14);
      CHECK(std::abs(copula_cdf(cop, u, 0.0)) <= 1e-14);
    }
  }
}

TEST_CASE("hfunc pinned values") {
  CHECK(hfunc(BivariateCopula::fgm(1.0), 0.5, 0.0) ==
        doctest::Approx(0.75).epsilon(1e-14));
  for (double alpha : {-1.0, -0.3, 0.4, 1.0}) {
    for (int i = 0; i <= 10; ++i) {
      const double u = i / 10.0;
      CHECK(std::abs(hfunc(BivariateCopula::fgm(alpha), u, 0.5) - u) <= 1e-14);
      CHECK(std::abs(hfunc(BivariateCopula::independence(), u, 0.31) - u) <= 1e-15);
    }
  }
}

TEST_CASE("hfunc matches the finite-difference derivative of the cdf") {
  for (const auto& cop : builtin_fixtures()) {
    double worst = 0.0;
    for (int i = 1; i < 101; ++i) {
      for (int j = 1; j < 101; ++j) {
        const double u = i / 101.0, w = j / 101.0;
        const double numeric = central_diff_01(
            [&](double s) { return copula_cdf(cop, u, s); }, w, 1e-5);
        worst = std::max(worst, std::abs(numeric - hfunc(cop, u, w)));
      }
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("hfunc_inverse pinned values and boundaries") {
  CHECK(hfunc_inverse(BivariateCopula::fgm(1.0), 0.75, 0.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  for (const auto& cop : builtin_fixtures()) {
    for (double w : {0.1, 0.5, 0.9}) {
      CHECK(hfunc_inverse(cop, 0.0, w) == 0.0);
      CHECK(hfunc_inverse(cop, 1.0, w) == 1.0);
    }
  }
  for (double v : {0.2, 0.8}) {
    CHECK(hfunc_inverse(BivariateCopula::independence(), v, 0.77) == v);
  }
}

TEST_CASE("hfunc_inverse inverts hfunc on a grid") {
  for (const auto& cop : builtin_fixtures()) {
    double worst = 0.0;
    for (int i = 1; i < 40; ++i) {
      for (int j = 1; j < 40; ++j) {
        const double u = i / 40.0, w = j / 40.0;
        worst = std::max(worst,
                         std::abs(hfunc_inverse(cop, hfunc(cop, u, w), w) - u));
      }
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("integrating hfunc over w recovers the margin") {
  const QuadratureRule rule = gauss_rule(64);
  for (const auto& cop : builtin_fixtures()) {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double u = i / 20.0;
      const double rec =
          integrate_01([&](double w) { return hfunc(cop, u, w); }, rule);
      worst = std::max(worst, std::abs(rec - u));
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("hfunc_du closed forms agree with numerical differentiation") {
  for (const auto& cop : builtin_fixtures()) {
    double worst = 0.0;
    for (int i = 1; i < 20; ++i) {
      for (int j = 1; j < 20; ++j) {
        const double u = i / 20.0, w = j / 20.0;
        const double numeric = central_diff_01(
            [&](double t) { return hfunc(cop, t, w); }, u, 1e-6);
        worst = std::max(worst, std::abs(numeric - hfunc_du(cop, u, w)));
      }
    }
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("validate reports invariant violations") {
  const CopulaCheck good = validate(BivariateCopula::fgm(1.0), 101);
  CHECK(good.worst() <= 1e-12);

  const CopulaCheck ind = validate(BivariateCopula::independence(), 51);
  CHECK(ind.worst() <= 1e-14);

  // aggregate construction bypasses the factories; alpha=2 has a signed
  // density 1 + alpha(1-2u)(1-2w) and must fail the rectangle check
  const BivariateCopula bad{CopulaFamily::Fgm, 2.0};
  const CopulaCheck report = validate(bad, 101);
  CHECK(report.rectangle > 1e-6);
  CHECK_FALSE(report.pass(1e-9));

  CHECK_THROWS_AS(validate(bad, 2), std::invalid_argument);
}
