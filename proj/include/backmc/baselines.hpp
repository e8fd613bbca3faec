#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "backmc/backmc.hpp"
#include "backmc/error.hpp"
#include "backmc/estimator_types.hpp"
#include "backmc/oracle.hpp"
#include "backmc/sample_node.hpp"
#include "backmc/sparse_scratch.hpp"

namespace backmc {

// ---------------------------------------------------------------------------
// Global Monte Carlo: walks from uniform sources, pi^(t) = hits / walks.
// Stops after ceil(stopping_threshold(c, p_f)) hits or cfg.walk_cap walks.

template <GraphAccess Oracle>
Estimate mc_global(Oracle& oracle, NodeId t, const EstimatorConfig& cfg) {
  validate_config(cfg);
  if (t >= oracle.num_nodes()) {
    throw BoundsError("mc_global: target " + std::to_string(t) +
                      " out of range");
  }
  const auto start = std::chrono::steady_clock::now();
  const QueryCounters before = oracle.counters();
  const std::uint64_t needed = stable_ceil(stopping_threshold(cfg.c, cfg.p_f));

  Estimate est;
  std::uint64_t hits = 0;
  while (hits < needed && est.walks < cfg.walk_cap) {
    const NodeId source = oracle.jump();
    const WalkEnd end = sample_node(oracle, source, cfg.alpha);
    ++est.walks;
    est.moves += end.moves;
    if (end.terminal == t) ++hits;
  }
  est.budget_exhausted = hits < needed;
  est.value = static_cast<double>(hits) / static_cast<double>(est.walks);
  est.counters = oracle.counters() - before;
  est.elapsed = std::chrono::steady_clock::now() - start;
  return est;
}

// ---------------------------------------------------------------------------
// BackwardPush: deterministic residue propagation from t. Throughout,
//   pi(t) = (1/n) sum_s reserve(s) + sum_u residue(u) pi(u).

struct BackwardPushState {
  std::unordered_map<NodeId, double> reserve;
  std::unordered_map<NodeId, double> residue;
  double r_max = 0.0;
};

struct BackwardPushResult {
  Estimate estimate;
  BackwardPushState state;
};

template <GraphAccess Oracle>
BackwardPushResult backward_push(Oracle& oracle, NodeId t, double alpha,
                                 double r_max) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
  if (!(r_max > 0.0)) throw ParameterError("r_max must be positive");
  const std::size_t n = oracle.num_nodes();
  if (t >= n) {
    throw BoundsError("backward_push: target " + std::to_string(t) +
                      " out of range");
  }
  const auto start = std::chrono::steady_clock::now();
  const QueryCounters before = oracle.counters();

  detail::SparseScratch residue(n);
  detail::SparseScratch reserve(n);
  std::vector<char> queued(n, 0);
  std::deque<NodeId> queue;

  residue[t] = 1.0;
  queue.push_back(t);
  queued[t] = 1;
  bool first = true;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    const double r = residue.get(u);
    if (!(r > r_max)) continue;
    const std::size_t d_u = oracle.deg(u);
    if (first && d_u == 0) {
      throw IsolatedTargetError(alpha / static_cast<double>(n));
    }
    first = false;
    reserve[u] += alpha * r;
    residue[u] = 0.0;
    for (std::size_t i = 0; i < d_u; ++i) {
      const NodeId v = oracle.neigh(u, i);
      const std::size_t d_v = oracle.deg(v);
      double& rv = residue[v];
      rv += (1.0 - alpha) * r / static_cast<double>(d_v);
      if (rv > r_max && !queued[v]) {
        queued[v] = 1;
        queue.push_back(v);
      }
    }
  }

  BackwardPushResult out;
  out.state.r_max = r_max;
  double total = 0.0;
  for (NodeId s : reserve.touched()) {
    total += reserve.get(s);
    out.state.reserve.emplace(s, reserve.get(s));
  }
  for (NodeId u : residue.touched()) {
    if (residue.get(u) != 0.0) out.state.residue.emplace(u, residue.get(u));
  }
  out.estimate.value = total / static_cast<double>(n);
  out.estimate.counters = oracle.counters() - before;
  out.estimate.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

// Threshold from the relative-error target: r_max = c alpha / n.
template <GraphAccess Oracle>
BackwardPushResult backward_push(Oracle& oracle, NodeId t,
                                 const EstimatorConfig& cfg,
                                 std::optional<double> r_max = {}) {
  validate_config(cfg);
  return backward_push(
      oracle, t, cfg.alpha,
      r_max.value_or(backward_push_rmax(cfg.c, cfg.alpha, oracle.num_nodes())));
}

// ---------------------------------------------------------------------------
// SetPush: level-synchronous push from t where pushes below theta are
// randomized so each neighbor receives theta with the matching probability.
// Without truncation each run is an unbiased estimate of pi(t).

struct SetPushState {
  // residues r^(l) for every level reached; filled only when requested
  std::vector<std::unordered_map<NodeId, double>> level_residues;
  double theta = 0.0;
  std::size_t levels = 0;
  double accumulator = 0.0;
};

namespace detail {

// k distinct indices uniform from [0, d), appended to `out`. Floyd's
// algorithm for k <= d/2, complement sampling otherwise; draws O(min(k, d-k)).
inline void sample_distinct(Rng& rng, std::size_t d, std::size_t k,
                            std::vector<std::size_t>& out) {
  auto floyd = [&rng, d](std::size_t count, std::vector<std::size_t>& chosen) {
    std::unordered_set<std::size_t> seen;
    const bool small = count <= 32;
    for (std::size_t j = d - count; j < d; ++j) {
      const std::size_t r = rng.below(j + 1);
      bool dup = small ? std::find(chosen.begin(), chosen.end(), r) !=
                             chosen.end()
                       : seen.count(r) > 0;
      const std::size_t pick = dup ? j : r;
      chosen.push_back(pick);
      if (!small) seen.insert(pick);
    }
  };
  if (2 * k <= d) {
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    floyd(k, chosen);
    out.insert(out.end(), chosen.begin(), chosen.end());
    return;
  }
  std::vector<std::size_t> excluded;
  excluded.reserve(d - k);
  floyd(d - k, excluded);
  std::vector<char> skip(d, 0);
  for (std::size_t e : excluded) skip[e] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (!skip[i]) out.push_back(i);
  }
}

}  // namespace detail

template <GraphAccess Oracle>
double setpush_single_run(Oracle& oracle, NodeId t, std::size_t d_t,
                          double alpha, const SetPushParams& params,
                          SetPushState* state = nullptr) {
  if (d_t == 0) {
    throw IsolatedTargetError(alpha / static_cast<double>(oracle.num_nodes()));
  }
  const std::size_t n = oracle.num_nodes();
  Rng& rng = oracle.rng();
  detail::SparseScratch cur(n);
  detail::SparseScratch next(n);
  std::vector<std::size_t> picks;
  cur[t] = 1.0;
  if (state) {
    state->theta = params.theta;
    state->levels = params.levels;
    state->level_residues.clear();
  }

  // sum over levels and nodes of alpha r^(l)(s) / d_s; scaled by d_t/n at
  // the end. Past level L only randomized unit pushes remain, each passing
  // on (1 - alpha) theta in expectation, so the residue set empties quickly.
  double acc = 0.0;
  for (std::size_t level = 0; !cur.touched().empty(); ++level) {
    if (state) {
      auto& snapshot = state->level_residues.emplace_back();
      for (NodeId u : cur.touched()) snapshot.emplace(u, cur.get(u));
    }
    const bool last = params.truncate && level == params.levels;
    for (NodeId u : cur.touched()) {
      const double r = cur.get(u);
      if (!(r > 0.0)) continue;
      const std::size_t d_u = (level == 0 && u == t) ? d_t : oracle.deg(u);
      acc += alpha * r / static_cast<double>(d_u);
      if (last) continue;

      const double share = (1.0 - alpha) * r / static_cast<double>(d_u);
      if (share >= params.theta) {
        for (std::size_t i = 0; i < d_u; ++i) next[oracle.neigh(u, i)] += share;
        continue;
      }
      const double rho = share / params.theta;
      std::binomial_distribution<std::size_t> binom(d_u, rho);
      const std::size_t k = binom(rng);
      if (k == 0) continue;
      picks.clear();
      detail::sample_distinct(rng, d_u, k, picks);
      for (std::size_t i : picks) next[oracle.neigh(u, i)] += params.theta;
    }
    cur.clear();
    std::swap(cur, next);
    if (last) break;
  }
  const double value =
      acc * static_cast<double>(d_t) / static_cast<double>(n);
  if (state) state->accumulator = value;
  return value;
}

// Median of median_run_count(p_f) independent SetPush runs.
template <GraphAccess Oracle>
Estimate setpush(Oracle& oracle, NodeId t, const EstimatorConfig& cfg,
                 const GraphStats& stats) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  const QueryCounters before = oracle.counters();
  const std::size_t d_t = detail::target_degree_or_throw(oracle, t, cfg.alpha);
  const SetPushParams params = setpush_params(
      oracle.num_nodes(), stats.num_edges, d_t, cfg.alpha, cfg.c);

  Estimate est;
  est.runs = median_run_count(cfg.p_f);
  const Rng root = oracle.rng();
  std::vector<double> values;
  values.reserve(est.runs);
  for (std::uint64_t j = 0; j < est.runs; ++j) {
    oracle.rng() = root.substream(j);
    values.push_back(setpush_single_run(oracle, t, d_t, cfg.alpha, params));
  }
  oracle.rng() = root.substream(est.runs);
  est.value = median_of_runs(values);
  est.counters = oracle.counters() - before;
  est.elapsed = std::chrono::steady_clock::now() - start;
  return est;
}

}  // namespace backmc
