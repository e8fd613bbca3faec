// backmc: generate graphs, compute ground truth, run single estimates and
// full experiments from the command line.
//
// Exit codes: 0 ok, 2 bad parameter, 3 bad input/format, 4 estimator refused.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "backmc/backmc.hpp"
#include "backmc/baselines.hpp"
#include "backmc/edge_list.hpp"
#include "backmc/error.hpp"
#include "backmc/generators.hpp"
#include "backmc/ground_truth.hpp"
#include "backmc/harness.hpp"

namespace {

using namespace backmc;

constexpr int kExitParam = 2;
constexpr int kExitInput = 3;
constexpr int kExitRefused = 4;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split_list(s)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParameterError("bad c value '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("write failed for " + path);
}

UndirectedGraph load_graph(const std::string& path) {
  LoadedGraph loaded = load_edge_list_file(path);
  if (loaded.duplicates_removed > 0) {
    std::cerr << "warning: removed " << loaded.duplicates_removed
              << " duplicate edges from " << path << '\n';
  }
  return std::move(loaded.graph);
}

std::string fmt_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local PageRank estimation toolkit"};
  app.require_subcommand(1);

  // gen-er
  auto* gen_er = app.add_subcommand("gen-er", "Generate an Erdos-Renyi graph");
  ErParams er;
  std::string er_out;
  gen_er->add_option("--n", er.n, "Node count")->required();
  gen_er->add_option("--edge-prob", er.edge_prob, "Per-pair edge probability")
      ->required();
  gen_er->add_option("--seed", er.seed, "RNG seed")->required();
  gen_er->add_option("--out", er_out, "Output edge list")->required();

  // gen-hard
  auto* gen_hard =
      app.add_subcommand("gen-hard", "Generate a lower-bound hard instance");
  HardInstanceParams hard;
  std::string hard_out;
  gen_hard->add_option("--level", hard.level)->required();
  gen_hard->add_option("--max-level", hard.max_level)->required();
  gen_hard->add_option("--group-size", hard.group_size)->required();
  gen_hard->add_option("--hub-count", hard.hub_count)->required();
  gen_hard->add_option("--pad-to-n", hard.pad_to_n)->required();
  gen_hard->add_option("--seed", hard.seed)->required();
  gen_hard->add_option("--out", hard_out)->required();

  // ground-truth
  auto* gt = app.add_subcommand("ground-truth", "Power-iteration PageRank");
  std::string gt_graph, gt_out;
  double gt_alpha = 0.2;
  gt->add_option("--graph", gt_graph)->required();
  gt->add_option("--alpha", gt_alpha)->required();
  gt->add_option("--out", gt_out)->required();

  // estimate
  auto* est_cmd = app.add_subcommand("estimate", "Estimate pi(t) once");
  std::string est_graph, est_algo, est_mode = "fixed";
  NodeId est_target = 0;
  EstimatorConfig est_cfg;
  std::optional<double> est_rmax;
  est_cmd->add_option("--graph", est_graph)->required();
  est_cmd->add_option("--target", est_target)->required();
  est_cmd->add_option("--algo", est_algo)
      ->required()
      ->check(CLI::IsMember({"backmc", "mc", "backwardpush", "setpush"}));
  est_cmd->add_option("--alpha", est_cfg.alpha)->required();
  est_cmd->add_option("--c", est_cfg.c)->required();
  est_cmd->add_option("--pf", est_cfg.p_f)->required();
  est_cmd->add_option("--seed", est_cfg.seed)->required();
  est_cmd->add_option("--mode", est_mode)
      ->check(CLI::IsMember({"fixed", "adaptive"}));
  est_cmd->add_option("--rmax", est_rmax, "BackwardPush threshold");
  est_cmd->add_option("--walk-cap", est_cfg.walk_cap);

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Run a trial grid");
  ExperimentSpec spec;
  std::string exp_graph, exp_algos, exp_grid, exp_mode = "uniform",
                                               exp_out, exp_summary,
                                               exp_est_mode = "fixed";
  exp_cmd->add_option("--graph", exp_graph)->required();
  exp_cmd->add_option("--algos", exp_algos)->required();
  exp_cmd->add_option("--alpha", spec.alpha)->required();
  exp_cmd->add_option("--c-grid", exp_grid)->required();
  exp_cmd->add_option("--pf", spec.p_f)->required();
  exp_cmd->add_option("--targets", spec.num_targets)->required();
  exp_cmd->add_option("--target-mode", exp_mode)
      ->required()
      ->check(CLI::IsMember({"uniform", "degree"}));
  exp_cmd->add_option("--trials", spec.trials_per_target)->required();
  exp_cmd->add_option("--seed", spec.master_seed)->required();
  exp_cmd->add_option("--out", exp_out)->required();
  exp_cmd->add_option("--mode", exp_est_mode)
      ->check(CLI::IsMember({"fixed", "adaptive"}));
  exp_cmd->add_option("--rmax", spec.r_max);
  exp_cmd->add_option("--walk-cap", spec.walk_cap);
  exp_cmd->add_option("--threads", spec.threads, "Worker threads (0 = all)");
  exp_cmd->add_option("--summary", exp_summary, "Also write per-(algo,c) means");
  exp_cmd->add_flag("--record-time", spec.record_time,
                    "Fill wall_time_ns (output is then not reproducible)");

  // validate-hard
  auto* vh = app.add_subcommand("validate-hard",
                                "Check pi_i(t) separation across G^(0..p)");
  HardInstanceParams vh_params;
  std::size_t vh_levels = 2;
  double vh_alpha = 0.2;
  vh->add_option("--max-level", vh_levels)->required();
  vh->add_option("--group-size", vh_params.group_size)->required();
  vh->add_option("--hub-count", vh_params.hub_count)->required();
  vh->add_option("--pad-to-n", vh_params.pad_to_n)->required();
  vh->add_option("--alpha", vh_alpha)->required();
  vh->add_option("--seed", vh_params.seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParam;
  }

  try {
    if (gen_er->parsed()) {
      write_edge_list_file(generate_er(er), er_out);
    } else if (gen_hard->parsed()) {
      const HardInstance inst = generate_hard_instance(hard);
      write_edge_list_file(inst.graph, hard_out);
      std::cout << inst.target << '\n';
    } else if (gt->parsed()) {
      const UndirectedGraph g = load_graph(gt_graph);
      const ScoreVector pi = pagerank_power(g, gt_alpha);
      std::string text = "node,score\n";
      for (std::size_t u = 0; u < pi.values.size(); ++u) {
        text += std::to_string(u) + ',' + fmt_real(pi.values[u]) + '\n';
      }
      write_text(gt_out, text);
    } else if (est_cmd->parsed()) {
      const UndirectedGraph g = load_graph(est_graph);
      if (est_target >= g.num_nodes()) {
        throw ParameterError("target " + std::to_string(est_target) +
                             " out of range");
      }
      est_cfg.mode = est_mode == "adaptive" ? EstimatorMode::Adaptive
                                            : EstimatorMode::Fixed;
      const GraphStats stats = graph_stats(g);
      GraphOracle oracle(g, est_cfg.seed);
      Estimate e;
      switch (parse_algorithm(est_algo)) {
        case Algorithm::BackMC: e = backmc::backmc(oracle, est_target, est_cfg, stats); break;
        case Algorithm::MC: e = mc_global(oracle, est_target, est_cfg); break;
        case Algorithm::BackwardPush:
          e = backward_push(oracle, est_target, est_cfg, est_rmax).estimate;
          break;
        case Algorithm::SetPush: e = setpush(oracle, est_target, est_cfg, stats); break;
      }
      nlohmann::ordered_json out;
      out["algo"] = est_algo;
      out["target"] = est_target;
      out["estimate"] = e.value;
      out["deg_calls"] = e.counters.deg_calls;
      out["neigh_calls"] = e.counters.neigh_calls;
      out["jump_calls"] = e.counters.jump_calls;
      out["total_queries"] = e.counters.total();
      out["walks"] = e.walks;
      out["moves"] = e.moves;
      out["runs"] = e.runs;
      out["budget_exhausted"] = e.budget_exhausted;
      out["wall_time_ns"] = e.elapsed.count();
      std::cout << out.dump(2) << '\n';
    } else if (exp_cmd->parsed()) {
      spec.graph_source = exp_graph;
      for (const auto& name : split_list(exp_algos)) {
        spec.algorithms.push_back(parse_algorithm(name));
      }
      spec.c_grid = parse_grid(exp_grid);
      spec.target_mode = parse_target_mode(exp_mode);
      spec.mode = exp_est_mode == "adaptive" ? EstimatorMode::Adaptive
                                             : EstimatorMode::Fixed;
      validate_spec(spec);
      const auto rows = run_experiment(spec);
      write_text(exp_out, trial_csv(rows));
      if (!exp_summary.empty()) {
        write_text(exp_summary, summary_csv(summarize(rows)));
      }
    } else if (vh->parsed()) {
      const HardFamilyReport report =
          validate_hard_family(vh_params, vh_levels, vh_alpha);
      std::cout << format_report(report);
      if (!report.strictly_increasing) return 1;
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  } catch (const IsolatedTargetError& e) {
    std::cerr << "error: " << e.what() << " (" << fmt_real(e.exact_value())
              << ")\n";
    return kExitRefused;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BoundsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
