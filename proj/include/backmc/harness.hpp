#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "backmc/estimator_types.hpp"
#include "backmc/generators.hpp"
#include "backmc/graph.hpp"

namespace backmc {

enum class Algorithm { BackMC, MC, BackwardPush, SetPush };

std::string_view algorithm_name(Algorithm a);
// Accepts "backmc", "mc", "backwardpush", "setpush"; throws ParameterError.
Algorithm parse_algorithm(std::string_view name);

enum class TargetMode { Uniform, Degree };
TargetMode parse_target_mode(std::string_view name);

// k distinct non-isolated nodes. Uniform mode shuffles the eligible set and
// takes a prefix; degree mode draws u with probability d_u / 2m by inverse
// CDF over cumulative degrees and rejects repeats.
std::vector<NodeId> sample_targets(const UndirectedGraph& g, std::size_t k,
                                   TargetMode mode, std::uint64_t seed);

struct ExperimentSpec {
  std::variant<std::string, ErParams> graph_source;  // edge-list path or G(n,p)
  std::vector<Algorithm> algorithms;
  double alpha = 0.2;
  std::vector<double> c_grid;
  double p_f = 0.1;
  TargetMode target_mode = TargetMode::Uniform;
  std::size_t num_targets = 10;
  std::size_t trials_per_target = 1;
  std::uint64_t master_seed = 0;

  EstimatorMode mode = EstimatorMode::Fixed;
  std::optional<double> r_max;  // BackwardPush; default c * alpha / n
  std::uint64_t walk_cap = 100'000'000;
  std::size_t threads = 0;      // 0: hardware concurrency
  bool record_time = false;     // wall_time_ns stays 0 unless set
};

void validate_spec(const ExperimentSpec& spec);

struct TrialRecord {
  std::string algo;
  std::string dataset;
  NodeId target = 0;
  double alpha = 0.0;
  double c = 0.0;
  double p_f = 0.0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double ground_truth = 0.0;
  double rel_error = 0.0;
  std::uint64_t deg_calls = 0;
  std::uint64_t neigh_calls = 0;
  std::uint64_t jump_calls = 0;
  std::uint64_t total_queries = 0;
  std::uint64_t walks = 0;
  std::uint64_t moves = 0;
  std::uint64_t wall_time_ns = 0;
  std::string error;  // empty on success; estimate and rel_error are NaN otherwise
};

// RNG seed of one trial, a hash of every coordinate that names it.
std::uint64_t trial_seed(std::uint64_t master_seed, Algorithm algo,
                         NodeId target, double c, std::size_t trial);

// Resolves the graph source, then runs every (algo, target, c, trial) cell.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec);

// Same on an already loaded graph. Records come back in canonical
// (algo, target, c, trial) order whatever the thread count.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec,
                                        const UndirectedGraph& g,
                                        const std::string& dataset);

// Throws ContractError if a row's derived fields disagree with its inputs.
void validate_record(const TrialRecord& r);

std::string trial_csv_header();
void write_trial_csv(std::ostream& out, const std::vector<TrialRecord>& rows);
std::string trial_csv(const std::vector<TrialRecord>& rows);
std::vector<TrialRecord> read_trial_csv(std::istream& in);

struct SummaryRow {
  std::string algo;
  double c = 0.0;
  std::size_t trials = 0;  // successful rows
  std::size_t failed = 0;  // rows with an error tag
  double mean_rel_error = 0.0;
  double mean_total_queries = 0.0;
  double mean_wall_time_ns = 0.0;
  double failure_fraction = 0.0;  // share of successful rows with rel_error > c
};

// One row per (algo, c), in first-appearance order.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& rows);
std::string summary_csv(const std::vector<SummaryRow>& rows);

struct HardFamilyReport {
  NodeId target = 0;
  std::vector<std::size_t> target_degrees;  // d_t of G^(0..p)
  std::vector<double> scores;               // ground-truth pi_i(t)
  std::vector<double> ratios;               // pi_i / pi_{i-1}, i = 1..p
  double delta = 0.0;                       // min ratio - 1
  bool strictly_increasing = false;
};

// Builds G^(0..max_level) from `base` (its level is ignored), scores t in
// each with power iteration and reports the consecutive ratios.
HardFamilyReport validate_hard_family(const HardInstanceParams& base,
                                      std::size_t max_level, double alpha);

std::string format_report(const HardFamilyReport& report);

}  // namespace backmc
