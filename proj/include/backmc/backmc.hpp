#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "backmc/error.hpp"
#include "backmc/estimator_types.hpp"
#include "backmc/oracle.hpp"
#include "backmc/sample_node.hpp"

namespace backmc {

// One realization of q(t) = d_t / (n d_v), v the end of a walk from t.
struct BackMCDraw {
  double q = 0.0;
  std::size_t terminal_degree = 0;
  std::uint64_t moves = 0;
};

template <GraphAccess Oracle>
BackMCDraw backmc_draw(Oracle& oracle, NodeId t, std::size_t d_t,
                       double alpha) {
  const WalkEnd end = sample_node(oracle, t, alpha);
  const std::size_t d_v = oracle.deg(end.terminal);
  const double n = static_cast<double>(oracle.num_nodes());
  return {static_cast<double>(d_t) / (n * static_cast<double>(d_v)), d_v,
          end.moves};
}

struct BackMCRun {
  double value = 0.0;
  std::uint64_t walks = 0;
  std::uint64_t moves = 0;
};

namespace detail {

// Walks from t grouped by terminal degree. The mean is evaluated per degree
// class, so a regular graph yields d_t / (n d) with no summation error.
class TerminalDegreeTally {
 public:
  void add(std::size_t degree) {
    if (degree >= counts_.size()) counts_.resize(degree + 1, 0);
    ++counts_[degree];
    ++walks_;
  }
  std::uint64_t walks() const noexcept { return walks_; }
  // sum_i q_i
  double sum(std::size_t d_t, std::size_t n) const {
    return mean(d_t, n) * static_cast<double>(walks_);
  }
  // (1 / walks) sum_i d_t / (n d_i)
  double mean(std::size_t d_t, std::size_t n) const {
    const double num = static_cast<double>(d_t);
    double acc = 0.0;
    for (std::size_t d = 1; d < counts_.size(); ++d) {
      if (counts_[d] == 0) continue;
      const double freq =
          static_cast<double>(counts_[d]) / static_cast<double>(walks_);
      // n * d is exact, so a single class with d == d_t gives fl(1/n)
      acc += freq * (num / (static_cast<double>(n) * static_cast<double>(d)));
    }
    return acc;
  }

 private:
  std::vector<std::uint64_t> counts_;  // indexed by degree
  std::uint64_t walks_ = 0;
};

template <GraphAccess Oracle>
std::size_t target_degree_or_throw(Oracle& oracle, NodeId t, double alpha) {
  const std::size_t d_t = oracle.deg(t);
  if (d_t == 0) {
    throw IsolatedTargetError(alpha / static_cast<double>(oracle.num_nodes()));
  }
  return d_t;
}

}  // namespace detail

// Mean of n_r independent q(t) draws; d_t is supplied by the caller.
template <GraphAccess Oracle>
BackMCRun backmc_single_run(Oracle& oracle, NodeId t, std::size_t d_t,
                            double alpha, std::uint64_t n_r) {
  if (d_t == 0) {
    throw IsolatedTargetError(alpha / static_cast<double>(oracle.num_nodes()));
  }
  if (n_r == 0) throw ParameterError("n_r must be positive");
  detail::TerminalDegreeTally tally;
  BackMCRun run;
  for (std::uint64_t w = 0; w < n_r; ++w) {
    const BackMCDraw draw = backmc_draw(oracle, t, d_t, alpha);
    tally.add(draw.terminal_degree);
    run.moves += draw.moves;
  }
  run.walks = n_r;
  run.value = tally.mean(d_t, oracle.num_nodes());
  return run;
}

// Same, fetching d_t with one deg query first.
template <GraphAccess Oracle>
BackMCRun backmc_single_run(Oracle& oracle, NodeId t, double alpha,
                            std::uint64_t n_r) {
  const std::size_t d_t = detail::target_degree_or_throw(oracle, t, alpha);
  return backmc_single_run(oracle, t, d_t, alpha, n_r);
}

// Fixed mode: n_m runs of n_r walks (sized by plan_backmc from `stats`),
// run j drawing from substream j of the oracle's stream; returns the median.
// Adaptive mode needs neither m nor d_min: it doubles the walk count until
// sum_i d~ / d_{v_i} reaches stopping_threshold(c, p_f), with d~ the
// smallest terminal degree seen so far, and returns the plain mean.
template <GraphAccess Oracle>
Estimate backmc(Oracle& oracle, NodeId t, const EstimatorConfig& cfg,
                const GraphStats& stats) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  const QueryCounters before = oracle.counters();
  const std::size_t d_t = detail::target_degree_or_throw(oracle, t, cfg.alpha);
  const std::size_t n = oracle.num_nodes();

  Estimate est;
  if (cfg.mode == EstimatorMode::Fixed) {
    const BackMCPlan plan = plan_backmc(stats, d_t, cfg);
    const Rng root = oracle.rng();
    std::vector<double> values;
    values.reserve(plan.n_m);
    for (std::uint64_t j = 0; j < plan.n_m; ++j) {
      oracle.rng() = root.substream(j);
      const BackMCRun run = backmc_single_run(oracle, t, d_t, cfg.alpha,
                                              plan.n_r);
      values.push_back(run.value);
      est.walks += run.walks;
      est.moves += run.moves;
    }
    oracle.rng() = root.substream(plan.n_m);
    est.value = median_of_runs(values);
    est.runs = plan.n_m;
  } else {
    const double threshold = stopping_threshold(cfg.c, cfg.p_f);
    detail::TerminalDegreeTally tally;
    std::uint64_t batch_end = 2;
    std::size_t d_seen = 0;
    while (true) {
      while (tally.walks() < batch_end) {
        const BackMCDraw draw = backmc_draw(oracle, t, d_t, cfg.alpha);
        tally.add(draw.terminal_degree);
        est.moves += draw.moves;
        if (d_seen == 0 || draw.terminal_degree < d_seen) {
          d_seen = draw.terminal_degree;
        }
      }
      const double normalized = tally.sum(d_t, n) *
                                static_cast<double>(n) *
                                static_cast<double>(d_seen) /
                                static_cast<double>(d_t);
      if (normalized >= threshold) break;
      if (batch_end >= cfg.walk_cap) {
        est.budget_exhausted = true;
        break;
      }
      batch_end = std::min(batch_end * 2, cfg.walk_cap);
    }
    est.walks = tally.walks();
    est.value = tally.mean(d_t, n);
  }
  est.counters = oracle.counters() - before;
  est.elapsed = std::chrono::steady_clock::now() - start;
  return est;
}

}  // namespace backmc
