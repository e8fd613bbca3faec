#include "backmc/harness.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "backmc/error.hpp"
#include "backmc/rng.hpp"

namespace backmc {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::BackMC: return "backmc";
    case Algorithm::MC: return "mc";
    case Algorithm::BackwardPush: return "backwardpush";
    case Algorithm::SetPush: return "setpush";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::BackMC, Algorithm::MC,
                      Algorithm::BackwardPush, Algorithm::SetPush}) {
    if (algorithm_name(a) == name) return a;
  }
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

TargetMode parse_target_mode(std::string_view name) {
  if (name == "uniform") return TargetMode::Uniform;
  if (name == "degree") return TargetMode::Degree;
  throw ParameterError("unknown target mode '" + std::string(name) + "'");
}

std::vector<NodeId> sample_targets(const UndirectedGraph& g, std::size_t k,
                                   TargetMode mode, std::uint64_t seed) {
  std::vector<NodeId> eligible;
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    if (g.degree(static_cast<NodeId>(u)) > 0) {
      eligible.push_back(static_cast<NodeId>(u));
    }
  }
  if (k > eligible.size()) {
    throw ParameterError("asked for " + std::to_string(k) +
                         " targets but only " +
                         std::to_string(eligible.size()) +
                         " nodes have degree >= 1");
  }
  Rng rng(seed);
  if (mode == TargetMode::Uniform) {
    // Partial Fisher-Yates: the first k slots end up a uniform k-subset in
    // random order.
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(eligible[i], eligible[i + rng.below(eligible.size() - i)]);
    }
    eligible.resize(k);
    return eligible;
  }

  auto offsets = g.offsets();
  const std::uint64_t arcs = offsets.back();
  std::vector<NodeId> picked;
  std::unordered_set<NodeId> seen;
  while (picked.size() < k) {
    const std::uint64_t arc = rng.below(arcs);
    // Node u owns arcs [offsets[u], offsets[u+1]).
    const auto it = std::upper_bound(offsets.begin(), offsets.end(), arc);
    const auto u = static_cast<NodeId>((it - offsets.begin()) - 1);
    if (seen.insert(u).second) picked.push_back(u);
  }
  return picked;
}

}  // namespace backmc
