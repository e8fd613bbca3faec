#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <thread>

#include "backmc/backmc.hpp"
#include "backmc/baselines.hpp"
#include "backmc/edge_list.hpp"
#include "backmc/error.hpp"
#include "backmc/ground_truth.hpp"
#include "backmc/harness.hpp"
#include "backmc/oracle.hpp"

namespace backmc {
namespace {

struct Cell {
  Algorithm algo;
  NodeId target;
  double c;
  std::size_t trial;
};

Estimate run_estimator(Algorithm algo, GraphOracle& oracle, NodeId t,
                       const EstimatorConfig& cfg, const GraphStats& stats,
                       std::optional<double> r_max) {
  switch (algo) {
    case Algorithm::BackMC: return backmc(oracle, t, cfg, stats);
    case Algorithm::MC: return mc_global(oracle, t, cfg);
    case Algorithm::BackwardPush:
      return backward_push(oracle, t, cfg, r_max).estimate;
    case Algorithm::SetPush: return setpush(oracle, t, cfg, stats);
  }
  throw ParameterError("unknown algorithm");
}

std::string dataset_label(const ExperimentSpec& spec) {
  if (const auto* path = std::get_if<std::string>(&spec.graph_source)) {
    return std::filesystem::path(*path).filename().string();
  }
  const auto& er = std::get<ErParams>(spec.graph_source);
  std::ostringstream s;
  s.precision(17);
  s << "er-n" << er.n << "-p" << er.edge_prob << "-s" << er.seed;
  return s.str();
}

}  // namespace

void validate_spec(const ExperimentSpec& spec) {
  if (spec.algorithms.empty()) throw ParameterError("no algorithms given");
  if (spec.c_grid.empty()) throw ParameterError("empty c grid");
  for (double c : spec.c_grid) {
    if (!(c > 0.01 && c <= 0.5)) {
      throw ParameterError("c values must lie in (0.01, 0.5]");
    }
  }
  if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
  if (!(spec.p_f > 0.0 && spec.p_f < 1.0)) {
    throw ParameterError("p_f must lie in (0, 1)");
  }
  if (spec.num_targets == 0) throw ParameterError("need at least one target");
  if (spec.trials_per_target == 0) {
    throw ParameterError("need at least one trial per target");
  }
  if (spec.r_max && !(*spec.r_max > 0.0)) {
    throw ParameterError("r_max must be positive");
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, Algorithm algo,
                         NodeId target, double c, std::size_t trial) {
  std::uint64_t h = mix64(master_seed ^ 0xa0761d6478bd642fULL);
  h = mix64(h ^ (static_cast<std::uint64_t>(algo) + 1));
  h = mix64(h ^ (static_cast<std::uint64_t>(target) + 0x100000000ULL));
  h = mix64(h ^ std::bit_cast<std::uint64_t>(c));
  h = mix64(h ^ static_cast<std::uint64_t>(trial));
  return h;
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec) {
  validate_spec(spec);
  if (const auto* path = std::get_if<std::string>(&spec.graph_source)) {
    const LoadedGraph loaded = load_edge_list_file(*path);
    return run_experiment(spec, loaded.graph, dataset_label(spec));
  }
  const UndirectedGraph g = generate_er(std::get<ErParams>(spec.graph_source));
  return run_experiment(spec, g, dataset_label(spec));
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec,
                                        const UndirectedGraph& g,
                                        const std::string& dataset) {
  validate_spec(spec);
  const GraphStats stats = graph_stats(g);
  const ScoreVector truth = pagerank_power(g, spec.alpha);
  const std::vector<NodeId> targets =
      sample_targets(g, spec.num_targets, spec.target_mode,
                     mix64(spec.master_seed ^ 0x7467747367656473ULL));

  std::vector<Cell> cells;
  for (Algorithm algo : spec.algorithms) {
    for (NodeId t : targets) {
      for (double c : spec.c_grid) {
        for (std::size_t trial = 0; trial < spec.trials_per_target; ++trial) {
          cells.push_back({algo, t, c, trial});
        }
      }
    }
  }

  std::vector<TrialRecord> rows(cells.size());
  auto run_cell = [&](std::size_t i) {
    const Cell& cell = cells[i];
    TrialRecord& r = rows[i];
    r.algo = std::string(algorithm_name(cell.algo));
    r.dataset = dataset;
    r.target = cell.target;
    r.alpha = spec.alpha;
    r.c = cell.c;
    r.p_f = spec.p_f;
    r.seed = trial_seed(spec.master_seed, cell.algo, cell.target, cell.c,
                        cell.trial);
    r.ground_truth = truth[cell.target];

    EstimatorConfig cfg;
    cfg.alpha = spec.alpha;
    cfg.c = cell.c;
    cfg.p_f = spec.p_f;
    cfg.seed = r.seed;
    cfg.mode = spec.mode;
    cfg.walk_cap = spec.walk_cap;
    GraphOracle oracle(g, r.seed);
    try {
      const Estimate est =
          run_estimator(cell.algo, oracle, cell.target, cfg, stats, spec.r_max);
      r.estimate = est.value;
      r.rel_error = relative_error(est.value, r.ground_truth);
      r.deg_calls = est.counters.deg_calls;
      r.neigh_calls = est.counters.neigh_calls;
      r.jump_calls = est.counters.jump_calls;
      r.total_queries = est.counters.total();
      r.walks = est.walks;
      r.moves = est.moves;
      if (spec.record_time) {
        r.wall_time_ns = static_cast<std::uint64_t>(est.elapsed.count());
      }
      if (est.budget_exhausted) r.error = "budget_exhausted";
    } catch (const IsolatedTargetError&) {
      r.error = "isolated_target";
    } catch (const std::exception&) {
      r.error = "estimator_error";
    }
    if (!r.error.empty() && r.error != "budget_exhausted") {
      r.estimate = std::numeric_limits<double>::quiet_NaN();
      r.rel_error = std::numeric_limits<double>::quiet_NaN();
    }
  };

  std::size_t workers = spec.threads ? spec.threads
                                     : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, cells.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(i);
      });
    }
  }
  return rows;
}

void validate_record(const TrialRecord& r) {
  if (r.total_queries != r.deg_calls + r.neigh_calls + r.jump_calls) {
    throw ContractError("total_queries is not the sum of the counters");
  }
  const bool failed = !r.error.empty() && r.error != "budget_exhausted";
  if (failed) {
    if (!std::isnan(r.estimate) || !std::isnan(r.rel_error)) {
      throw ContractError("failed row must carry NaN estimate and rel_error");
    }
    return;
  }
  if (!(r.ground_truth > 0.0)) throw ContractError("ground truth not positive");
  if (!(r.estimate >= 0.0)) throw ContractError("negative estimate");
  const double expect = relative_error(r.estimate, r.ground_truth);
  if (std::abs(expect - r.rel_error) > 1e-12 * std::max(1.0, expect)) {
    throw ContractError("rel_error does not match estimate and ground truth");
  }
}

}  // namespace backmc
