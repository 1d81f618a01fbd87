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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <doctest.h>

#include "cicop/model.hpp"
#include "cicop/montecarlo.hpp"
#include "cicop/orderstats.hpp"
#include "cicop/permanent.hpp"
#include "test_support.hpp"

using namespace cicop;
using cicop::testing::load_fixture;
using cicop::testing::vec;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void report(int criterion, bool ok, const char* what, double elapsed) {
  std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion,
              what, elapsed);
  std::fflush(stdout);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial_coefficient(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// independent test-only route: integrate the joint density of (X_1, X_2)
// over {x < y} in the original coordinates, nothing shared with
// stress_strength's u-substituted quadrature
double stress_by_density(const CiModel& model) {
  const QuadratureRule rule = gauss_rule(64);
  const Component& c1 = model.component(1);
  const Component& c2 = model.component(2);
  return integrate_01(
      [&](double w) {
        return integrate_01(
            [&](double y) {
              const double outer = hfunc_du(c2.copula, cdf(c2.marginal, y), w) *
                                   pdf(c2.marginal, y);
              const double inner = integrate(
                  [&](double x) {
                    return hfunc_du(c1.copula, cdf(c1.marginal, x), w) *
                           pdf(c1.marginal, x);
                  },
                  rule, 0.0, y);
              return outer * inner;
            },
            rule);
      },
      rule);
}

}  // namespace

TEST_CASE("criterion 1: stress-strength by three routes") {
  const Stopwatch timer;
  const CiModel model = load_fixture("example3.json");
  const double target = 31.0 / 90.0;

  const double conditional = stress_strength(model, 1, 2);
  const double density = stress_by_density(model);

  const SampleBatch batch = sample(model, 1000000, 20260810);
  Eigen::Index hits = 0;
  for (Eigen::Index row = 0; row < batch.data.rows(); ++row) {
    if (batch.data(row, 0) < batch.data(row, 1)) ++hits;
  }
  const double monte_carlo = static_cast<double>(hits) / 1e6;

  const bool ok = std::abs(conditional - target) <= 1e-6 &&
                  std::abs(density - target) <= 1e-6 &&
                  std::abs(monte_carlo - target) <= 0.0015;
  const double elapsed = timer.seconds();
  std::printf("  conditional %.9f, density %.9f, monte carlo %.6f, "
              "target %.9f\n", conditional, density, monte_carlo, target);
  report(1, ok && elapsed < 5.0, "stress-strength = 31/90 by the conditional "
         "route, a density-route oracle, and Monte Carlo", elapsed);
  CHECK(std::abs(conditional - target) <= 1e-6);
  CHECK(std::abs(density - target) <= 1e-6);
  CHECK(std::abs(monte_carlo - target) <= 0.0015);
  CHECK(elapsed < 5.0);
}

TEST_CASE("criterion 2: conditional-independence verifier") {
  const Stopwatch timer;
  const CiModel independent = cicop::testing::iid_uniform_independence(2);
  const CiModel two_fgm = cicop::testing::exchangeable_fgm_uniform(2, 1.0);

  const CiReport product = verify_ci(product_candidate(2), independent, 21);
  const CiReport conditional =
      verify_ci(fgm_conditional_candidate(1.0), two_fgm, 21);
  const CiReport direct = verify_ci(fgm_direct_candidate(1.0), two_fgm, 21);

  const bool ok = product.pass && product.max_residual <= 1e-4 &&
                  conditional.pass && conditional.max_residual <= 1e-4 &&
                  !direct.pass && direct.max_residual >= 0.01;
  const double elapsed = timer.seconds();
  std::printf("  residuals: product %.2e, conditional %.2e, direct %.2e\n",
              product.max_residual, conditional.max_residual,
              direct.max_residual);
  report(2, ok && elapsed < 1.0, "verifier accepts both conditionally "
         "independent candidates and rejects direct coupling", elapsed);
  CHECK(product.pass);
  CHECK(conditional.pass);
  CHECK_FALSE(direct.pass);
  CHECK(direct.max_residual >= 0.01);
  CHECK(elapsed < 1.0);
}

TEST_CASE("criterion 3: iid reductions to the classical formulas") {
  const Stopwatch timer;
  double worst_single = 0.0, worst_pair = 0.0;
  for (int n : {2, 3, 5, 8}) {
    const CiModel iid = cicop::testing::iid_uniform_independence(n);
    std::vector<std::pair<int, int>> rank_pairs;
    if (n <= 3) {
      for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) rank_pairs.emplace_back(r, s);
    } else {
      rank_pairs = {{1, 2}, {1, n}, {2, n}, {n - 1, n}};
    }
    for (int gx = 1; gx <= 9; ++gx) {
      const double x = gx / 10.0;
      for (int r = 1; r <= n; ++r) {
        double formula = 0.0;
        for (int i = r; i <= n; ++i) {
          formula += binomial_coefficient(n, i) * std::pow(x, i) *
                     std::pow(1.0 - x, n - i);
        }
        worst_single = std::max(
            worst_single, std::abs(order_stat_cdf(iid, r, x) - formula));
      }
      for (int gy = gx; gy <= 9; ++gy) {
        const double y = gy / 10.0;
        for (const auto& [r, s] : rank_pairs) {
          double formula = 0.0;
          for (int i = r; i <= n; ++i) {
            for (int m = std::max(s - i, 0); m <= n - i; ++m) {
              formula += factorial(n) /
                         (factorial(i) * factorial(m) * factorial(n - i - m)) *
                         std::pow(x, i) * std::pow(y - x, m) *
                         std::pow(1.0 - y, n - i - m);
            }
          }
          worst_pair = std::max(
              worst_pair,
              std::abs(pair_order_stat_cdf(iid, r, s, x, y) - formula));
        }
      }
    }
  }
  const bool ok = worst_single <= 1e-12 && worst_pair <= 1e-12;
  const double elapsed = timer.seconds();
  std::printf("  worst deviation: single %.2e, pair %.2e\n", worst_single,
              worst_pair);
  report(3, ok && elapsed < 1.0, "iid order-statistic cdfs reduce to the "
         "binomial and multinomial formulas", elapsed);
  CHECK(worst_single <= 1e-12);
  CHECK(worst_pair <= 1e-12);
  CHECK(elapsed < 1.0);
}

TEST_CASE("criterion 4: dual-route equivalence on randomized models") {
  const Stopwatch timer;
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  double worst_route = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);  // 2..7
    std::vector<Component> components;
    for (int i = 0; i < n; ++i) {
      BivariateCopula cop;
      switch (rng() % 3) {
        case 0: cop = BivariateCopula::independence(); break;
        case 1: cop = BivariateCopula::fgm(2.0 * unif(rng) - 1.0); break;
        default: cop = BivariateCopula::clayton(1.0 + 2.0 * unif(rng)); break;
      }
      Marginal m;
      switch (rng() % 3) {
        case 0: m = Marginal::uniform01(); break;
        case 1: m = Marginal::power(0.5 + 2.5 * unif(rng)); break;
        default: m = Marginal::exponential(0.5 + 1.5 * unif(rng)); break;
      }
      components.push_back({cop, m});
    }
    const CiModel model(std::move(components), Marginal::uniform01());

    const double x = quantile(model.component(1).marginal, 0.2 + 0.3 * unif(rng));
    const double y = x + unif(rng);
    const int r = 1 + static_cast<int>(rng() % n);
    worst_route = std::max(
        worst_route, std::abs(order_stat_cdf_permanent(model, r, x) -
                              order_stat_cdf(model, r, x)));
    if (n >= 2) {
      const int lo = 1 + static_cast<int>(rng() % (n - 1));
      const int hi = lo + 1 + static_cast<int>(rng() % (n - lo));
      worst_route = std::max(
          worst_route, std::abs(pair_order_stat_cdf_permanent(model, lo, hi, x, y) -
                                pair_order_stat_cdf(model, lo, hi, x, y)));
    }
  }

  double worst_permanent = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = unif(rng);
    const double slow = permanent_naive(a);
    worst_permanent =
        std::max(worst_permanent, std::abs(permanent(a) - slow) /
                                      std::max(1.0, std::abs(slow)));
  }

  const bool ok = worst_route <= 1e-8 && worst_permanent <= 1e-12;
  const double elapsed = timer.seconds();
  std::printf("  worst deviation: permanent vs counting %.2e, "
              "Ryser vs naive %.2e\n", worst_route, worst_permanent);
  report(4, ok && elapsed < 30.0, "permanent and counting routes agree; Ryser "
         "agrees with brute-force enumeration", elapsed);
  CHECK(worst_route <= 1e-8);
  CHECK(worst_permanent <= 1e-12);
  CHECK(elapsed < 30.0);
}

TEST_CASE("criterion 5: copula-space consistency on every fixture") {
  const Stopwatch timer;
  double worst_diag = 0.0, worst_sum = 0.0, worst_uform = 0.0;
  const std::vector<const char*> fixtures{
      "example1.json", "example2.json", "example3.json", "iid_uniform_n2.json",
      "iid_uniform_n3.json", "mixed_n3.json"};
  for (const char* name : fixtures) {
    const CiModel model = load_fixture(name);
    const int n = model.size();
    bool common_marginal = true;
    for (int i = 2; i <= n; ++i) {
      common_marginal = common_marginal &&
                        model.component(i).marginal.family ==
                            model.component(1).marginal.family &&
                        model.component(i).marginal.param ==
                            model.component(1).marginal.param;
    }
    for (int g = 1; g < 10; ++g) {
      const double u = g / 10.0;
      const double x = quantile(model.component(1).marginal, u);
      worst_diag = std::max(
          worst_diag, std::abs(order_stat_cdf(model, n, x) -
                               joint_cdf(model, Eigen::VectorXd::Constant(n, x))));
      if (common_marginal) {
        worst_uform = std::max(
            worst_uform,
            std::abs(joint_copula(model, Eigen::VectorXd::Constant(n, u)) -
                     order_stat_cdf(model, n, x)));
      }
      double sum = 0.0, expected = 0.0;
      for (int r = 1; r <= n; ++r) sum += order_stat_cdf(model, r, x);
      for (int i = 1; i <= n; ++i) expected += cdf(model.component(i).marginal, x);
      worst_sum = std::max(worst_sum, std::abs(sum - expected));
    }
  }
  const bool ok = worst_diag <= 1e-10 && worst_uform <= 1e-10 && worst_sum <= 1e-9;
  const double elapsed = timer.seconds();
  std::printf("  worst deviation: diagonal %.2e, u-form %.2e, sum rule %.2e\n",
              worst_diag, worst_uform, worst_sum);
  report(5, ok, "joint copula, maximum cdf and the expected-count sum rule "
         "are mutually consistent", elapsed);
  CHECK(worst_diag <= 1e-10);
  CHECK(worst_uform <= 1e-10);
  CHECK(worst_sum <= 1e-9);
}

TEST_CASE("criterion 6: integration-constant resolution for the FGM pair") {
  const Stopwatch timer;
  const CiModel model = cicop::testing::exchangeable_fgm_uniform(2, 1.0);
  const Eigen::VectorXd u = vec({0.5, 0.5});

  const double quad = joint_copula(model, u);
  // independent midpoint Riemann oracle over one million cells
  const auto h = [](double t, double w) {
    return t + t * (1.0 - t) * (1.0 - 2.0 * w);
  };
  double riemann = 0.0;
  const int cells = 1000000;
  for (int i = 0; i < cells; ++i) {
    const double w = (i + 0.5) / cells;
    riemann += h(0.5, w) * h(0.5, w);
  }
  riemann /= cells;

  const double grounded = joint_copula_with_z(model, u, 0.0);
  // w=1 margin of the integrated pair copula is uv + coef*uv(1-u)(1-v)
  const double coef = (quad - 0.25) / (0.25 * 0.25);

  const bool ok = std::abs(quad - riemann) <= 1e-8 &&
                  std::abs(grounded) <= 1e-12 &&
                  std::abs(coef - 1.0 / 3.0) <= 1e-8;
  const double elapsed = timer.seconds();
  std::printf("  quadrature %.12f, riemann oracle %.12f, C(u,v,0) = %.1e\n",
              quad, riemann, grounded);
  std::printf("  computed w=1 margin coefficient: %.9f = alpha^2/3 "
              "(not alpha^2/6)\n", coef);
  report(6, ok, "quadrature of the conditional product matches the Riemann "
         "oracle and fixes the grounded integration constant", elapsed);
  CHECK(std::abs(quad - riemann) <= 1e-8);
  CHECK(std::abs(grounded) <= 1e-12);
  CHECK(std::abs(coef - 1.0 / 3.0) <= 1e-8);
}

TEST_CASE("criterion 7: mean residual life sanity") {
  const Stopwatch timer;
  const CiModel iid = cicop::testing::iid_uniform_independence(2);

  const double analytic = mean_residual_life(iid, 2, 1, 0.0);

  const SampleBatch batch = sample(iid, 1000000, 4242);
  double sum = 0.0, sumsq = 0.0;
  for (Eigen::Index row = 0; row < batch.data.rows(); ++row) {
    const double m = std::max(batch.data(row, 0), batch.data(row, 1));
    sum += m;
    sumsq += m * m;
  }
  const double count = static_cast<double>(batch.data.rows());
  const double mc = sum / count;
  const double sigma =
      std::sqrt((sumsq / count - mc * mc) / count);

  bool monotone = true;
  double previous = analytic;
  for (int g = 1; g <= 8; ++g) {
    const double value = mean_residual_life(iid, 2, 1, g / 10.0);
    monotone = monotone && value <= previous + 1e-10;
    previous = value;
  }

  const bool ok = std::abs(analytic - 2.0 / 3.0) <= 1e-8 &&
                  std::abs(mc - 2.0 / 3.0) <= 3.0 * sigma && monotone;
  const double elapsed = timer.seconds();
  std::printf("  analytic %.10f, monte carlo %.6f +- %.6f\n", analytic, mc,
              3.0 * sigma);
  report(7, ok, "mean residual life equals 2/3 at t=0 and is nonincreasing",
         elapsed);
  CHECK(std::abs(analytic - 2.0 / 3.0) <= 1e-8);
  CHECK(std::abs(mc - 2.0 / 3.0) <= 3.0 * sigma);
  CHECK(monotone);
}

TEST_CASE("criterion 8: sampled margins pass the KS check on every fixture") {
  const Stopwatch timer;
  const std::vector<const char*> fixtures{
      "example1.json", "example2.json", "example3.json", "iid_uniform_n2.json",
      "iid_uniform_n3.json", "mixed_n3.json"};
  bool all_ok = true;
  for (const char* name : fixtures) {
    const CiModel model = load_fixture(name);
    bool fixture_ok = false;
    for (std::uint64_t seed = 1001; seed <= 1002; ++seed) {  // rerun once
      fixture_ok = true;
      const SampleBatch batch = sample(model, 100000, seed);
      for (int col = 1; col <= model.size() + 1; ++col) {
        const Marginal& m = col <= model.size()
                                ? model.component(col).marginal
                                : model.z_marginal();
        const KsResult ks = ks_check(batch.data.col(col - 1),
                                     [&](double x) { return cdf(m, x); });
        fixture_ok = fixture_ok && ks.pass;
      }
      if (fixture_ok) break;
    }
    all_ok = all_ok && fixture_ok;
  }
  const double elapsed = timer.seconds();
  report(8, all_ok && elapsed < 10.0, "all sampled X and Z margins pass the "
         "KS check at alpha = 0.01", elapsed);
  CHECK(all_ok);
  CHECK(elapsed < 10.0);
}
