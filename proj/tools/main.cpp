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

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cicop/errors.hpp"
#include "cicop/model.hpp"
#include "cicop/model_io.hpp"
#include "cicop/montecarlo.hpp"
#include "cicop/orderstats.hpp"

namespace {

// exit codes: 0 ok, 2 parse/validation error, 3 numerical failure, 4 usage
constexpr int kOk = 0;
constexpr int kValidationExit = 2;
constexpr int kNumericExit = 3;
constexpr int kUsageExit = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_value(std::FILE* out, double v) { std::fprintf(out, "%.12g\n", v); }

Eigen::VectorXd parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": cannot parse \"" + tok + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(),
                                     static_cast<Eigen::Index>(values.size()));
}

struct GridSpec {
  double lo = 0.0, hi = 0.0, step = 0.0;

  std::vector<double> points() const {
    std::vector<double> xs;
    for (int i = 0;; ++i) {
      const double x = lo + i * step;
      if (x > hi + 1e-9 * step) break;
      xs.push_back(std::min(x, hi));
    }
    return xs;
  }
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.hi, &g.step,
                  &trailing) != 3) {
    throw UsageError("grid: expected a:b:step");
  }
  if (!(g.step > 0.0) || g.hi < g.lo) {
    throw UsageError("grid: requires a <= b and a positive step");
  }
  return g;
}

std::FILE* open_output(const std::string& path) {
  if (path.empty()) return stdout;
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (f == nullptr) throw UsageError("cannot open output file " + path);
  return f;
}

cicop::CandidateCopula builtin_candidate(const std::string& name,
                                         const cicop::CiModel& model) {
  const std::string prefix = "builtin:";
  if (name.rfind(prefix, 0) != 0) {
    throw UsageError("candidate: expected builtin:<name>");
  }
  const std::string which = name.substr(prefix.size());
  if (which == "product") return cicop::product_candidate(model.size());
  // the FGM candidates take alpha from the model's first component
  const cicop::BivariateCopula& first = model.component(1).copula;
  const double alpha =
      first.family == cicop::CopulaFamily::Fgm ? first.param : 1.0;
  if (which == "fgm-conditional") {
    return cicop::fgm_conditional_candidate(alpha);
  }
  if (which == "fgm-direct") return cicop::fgm_direct_candidate(alpha);
  throw UsageError("candidate: unknown builtin \"" + which +
                   "\" (product, fgm-conditional, fgm-direct)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Latent-variable copula models: joint and conditional distributions, "
      "conditional-independence checks, order statistics and reliability "
      "quantities, with a seeded Monte Carlo oracle."};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string model_path;
  app.add_option("--model", model_path, "model description file (JSON)")
      ->required();
  int quad_flag = 0;
  app.add_option("--quad-order", quad_flag,
                 "quadrature order override (1..512)")
      ->check(CLI::Range(1, 512));

  auto* eval = app.add_subcommand("eval-copula",
                                  "joint copula at u, optionally with the "
                                  "latent coordinate w");
  std::string u_list;
  double w_arg = 1.0;
  eval->add_option("--u", u_list, "comma-separated u_1,...,u_n")->required();
  auto* w_opt = eval->add_option("--w", w_arg, "latent coordinate in [0,1]");

  auto* order = app.add_subcommand("order-cdf", "cdf of the r-th order statistic");
  int rank_r = 0, rank_s = 0;
  double x_arg = 0.0, y_arg = 0.0;
  order->add_option("--r", rank_r, "rank")->required();
  order->add_option("--x", x_arg, "threshold")->required();

  auto* pair = app.add_subcommand("pair-cdf",
                                  "joint cdf of the r-th and s-th order statistics");
  pair->add_option("--r", rank_r, "lower rank")->required();
  pair->add_option("--s", rank_s, "upper rank")->required();
  pair->add_option("--x", x_arg, "threshold for rank r")->required();
  pair->add_option("--y", y_arg, "threshold for rank s")->required();

  auto* joint = app.add_subcommand("joint-cdf", "joint cdf at x_1,...,x_n");
  std::string x_list;
  joint->add_option("--x", x_list, "comma-separated x_1,...,x_n")->required();

  auto* stress = app.add_subcommand("stress", "stress-strength P{X_i < X_j}");
  int comp_i = 0, comp_j = 0;
  stress->add_option("--i", comp_i, "stress component (1-based)")->required();
  stress->add_option("--j", comp_j, "strength component (1-based)")->required();

  auto* mrl = app.add_subcommand("mrl",
                                 "mean residual life of the k-th order "
                                 "statistic given the r-th survives t");
  int mrl_k = 0, mrl_r = 0;
  double t_arg = 0.0;
  mrl->add_option("--k", mrl_k, "target rank")->required();
  mrl->add_option("--r", mrl_r, "conditioning rank (< k)")->required();
  mrl->add_option("--t", t_arg, "time")->required();

  auto* verify = app.add_subcommand("verify-ci",
                                    "test a candidate copula for conditional "
                                    "independence against the model");
  std::string candidate_name;
  int grid_size = 21;
  verify->add_option("--candidate", candidate_name,
                     "builtin:product | builtin:fgm-conditional | "
                     "builtin:fgm-direct")
      ->required();
  verify->add_option("--grid-size", grid_size, "grid points per axis");

  auto* samp = app.add_subcommand("sample", "draw a seeded sample batch");
  int count = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  samp->add_option("--count", count, "number of draws")->required();
  samp->add_option("--seed", seed, "64-bit seed")->required();
  samp->add_option("--out", out_path, "output CSV path")->required();

  auto* table = app.add_subcommand("table", "tabulate an operation over a grid");
  std::string table_op, grid_text, table_out;
  table->add_option("--op", table_op, "order-cdf | min-cdf | max-cdf | mrl")
      ->required()
      ->check(CLI::IsMember({"order-cdf", "min-cdf", "max-cdf", "mrl"}));
  table->add_option("--grid", grid_text, "a:b:step")->required();
  table->add_option("--r", rank_r, "rank (order-cdf, mrl)");
  table->add_option("--k", mrl_k, "target rank (mrl)");
  table->add_option("--out", table_out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageExit;
  }

  try {
    std::optional<int> quad_order;
    if (quad_flag > 0) {
      quad_order = quad_flag;
    } else if (const char* env = std::getenv("CICOPULA_QUAD_ORDER")) {
      try {
        quad_order = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError("CICOPULA_QUAD_ORDER: not an integer");
      }
    }
    const cicop::CiModel model = cicop::load_model(model_path, quad_order);
    const int n = model.size();

    if (*eval) {
      const Eigen::VectorXd u = parse_list(u_list, "--u");
      if (u.size() != n) throw UsageError("--u: expected one value per component");
      print_value(stdout,
                  w_opt->count() > 0
                      ? cicop::joint_copula_with_z(model, u, w_arg)
                      : cicop::joint_copula(model, u));
    } else if (*order) {
      print_value(stdout, cicop::order_stat_cdf(model, rank_r, x_arg));
    } else if (*pair) {
      print_value(stdout, cicop::pair_order_stat_cdf(model, rank_r, rank_s,
                                                     x_arg, y_arg));
    } else if (*joint) {
      const Eigen::VectorXd x = parse_list(x_list, "--x");
      if (x.size() != n) throw UsageError("--x: expected one value per component");
      print_value(stdout, cicop::joint_cdf(model, x));
    } else if (*stress) {
      print_value(stdout, cicop::stress_strength(model, comp_i, comp_j));
    } else if (*mrl) {
      print_value(stdout, cicop::mean_residual_life(model, mrl_k, mrl_r, t_arg));
    } else if (*verify) {
      const cicop::CandidateCopula candidate =
          builtin_candidate(candidate_name, model);
      const cicop::CiReport report = cicop::verify_ci(candidate, model, grid_size);
      std::printf("max_residual %.12g\n", report.max_residual);
      std::printf("%s\n", report.pass ? "PASS" : "FAIL");
    } else if (*samp) {
      const cicop::SampleBatch batch = cicop::sample(model, count, seed);
      std::FILE* out = open_output(out_path);
      for (int i = 1; i <= n; ++i) std::fprintf(out, "x%d,", i);
      std::fprintf(out, "z\n");
      for (int row = 0; row < batch.count(); ++row) {
        for (int col = 0; col <= n; ++col) {
          std::fprintf(out, "%.12g%c", batch.data(row, col),
                       col == n ? '\n' : ',');
        }
      }
      if (out != stdout) std::fclose(out);
    } else if (*table) {
      const GridSpec grid = parse_grid(grid_text);
      std::FILE* out = open_output(table_out);
      if (table_op == "order-cdf") {
        if (rank_r == 0) throw UsageError("table --op order-cdf requires --r");
        std::fprintf(out, "x,cdf\n");
        for (double x : grid.points()) {
          std::fprintf(out, "%.12g,", x);
          print_value(out, cicop::order_stat_cdf(model, rank_r, x));
        }
      } else if (table_op == "min-cdf" || table_op == "max-cdf") {
        const bool want_min = table_op == "min-cdf";
        std::fprintf(out, "x,%s\n", want_min ? "min_cdf" : "max_cdf");
        for (double x : grid.points()) {
          const auto [min_cdf, max_cdf] = cicop::extreme_cdfs(model, x);
          std::fprintf(out, "%.12g,", x);
          print_value(out, want_min ? min_cdf : max_cdf);
        }
      } else {  // mrl
        if (rank_r == 0 || mrl_k == 0) {
          throw UsageError("table --op mrl requires --k and --r");
        }
        std::fprintf(out, "t,mrl\n");
        for (double t : grid.points()) {
          std::fprintf(out, "%.12g,", t);
          print_value(out, cicop::mean_residual_life(model, mrl_k, rank_r, t));
        }
      }
      if (out != stdout) std::fclose(out);
    }
    return kOk;
  } catch (const cicop::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationExit;
  } catch (const cicop::NumericError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumericExit;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsageExit;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsageExit;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumericExit;
  }
}
