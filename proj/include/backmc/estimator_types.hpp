#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "backmc/graph.hpp"
#include "backmc/oracle.hpp"

namespace backmc {

enum class EstimatorMode { Fixed, Adaptive };

struct EstimatorConfig {
  double alpha = 0.2;
  double c = 0.1;    // relative-error target
  double p_f = 0.1;  // failure-probability target
  std::uint64_t seed = 0;
  EstimatorMode mode = EstimatorMode::Fixed;
  // Hard cap on walks for the sampling estimators that stop adaptively.
  std::uint64_t walk_cap = 100'000'000;
};

// Throws ParameterError unless alpha, c and p_f all lie in (0, 1).
void validate_config(const EstimatorConfig& cfg);

struct Estimate {
  double value = 0.0;
  QueryCounters counters;  // queries issued by this call only
  std::uint64_t walks = 0;
  std::uint64_t moves = 0;
  std::chrono::nanoseconds elapsed{0};
  std::uint64_t runs = 1;  // independent repetitions behind the median
  bool budget_exhausted = false;
};

struct BackMCPlan {
  std::uint64_t n_r = 1;  // walks per run
  std::uint64_t n_m = 1;  // runs; always odd
};

// Smallest odd integer >= ceil(18 ln(1/p_f)).
std::uint64_t median_run_count(double p_f);

// n_r = ceil(3 / (c^2 alpha d_min) * min(d_t, sqrt(m) / sqrt(2 (1 - alpha))))
// with d_min taken over non-isolated nodes, and n_m = median_run_count(p_f).
// Throws IsolatedTargetError when d_t == 0.
BackMCPlan plan_backmc(const GraphStats& stats, std::size_t d_t,
                       const EstimatorConfig& cfg);

// Middle order statistic of an odd-length, non-empty list.
double median_of_runs(std::span<const double> values);

// 4 (e - 2) (1 + c) ln(2 / p_f) / c^2: stop once the sum of [0, 1]-valued
// increments reaches this.
double stopping_threshold(double c, double p_f);

struct SetPushParams {
  std::size_t levels = 1;  // L
  double theta = 0.0;      // push threshold
  // Stop after level L instead of pushing until no residue is left. The
  // truncated run is biased low by about (1-alpha)^(L+1) relative.
  bool truncate = false;
};

// L = ceil(log_{1-alpha}(c alpha / (2n))) and
// theta = max(alpha c^2 / (12 L d_t), alpha c^2 / (12 L) * sqrt(2 (1-alpha) / m)).
SetPushParams setpush_params(std::size_t n, std::size_t m, std::size_t d_t,
                             double alpha, double c);

// c * alpha / n: with every residue at or below this, the BackwardPush error
// sum_u r(u) pi(u) <= r_max <= c * alpha / n <= c * pi(t).
double backward_push_rmax(double c, double alpha, std::size_t n);

// Ceiling that ignores relative noise below 1e-12, so formula values that
// are integers in exact arithmetic do not round up by one.
std::uint64_t stable_ceil(double x);

}  // namespace backmc
