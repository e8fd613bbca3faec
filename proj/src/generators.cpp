#include "backmc/generators.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "backmc/error.hpp"
#include "backmc/rng.hpp"

namespace backmc {

UndirectedGraph generate_er(const ErParams& params) {
  const std::size_t n = params.n;
  const double p = params.edge_prob;
  if (!(p > 0.0 && p <= 1.0)) {
    throw ParameterError("edge_prob must lie in (0, 1]");
  }
  Rng rng(params.seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(
      0.5 * static_cast<double>(n) * static_cast<double>(n > 0 ? n - 1 : 0) *
          p * 1.05 +
      16));

  if (p == 1.0) {
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t w = 0; w < v; ++w) {
        edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
      }
    }
    return UndirectedGraph::from_edges(n, edges);
  }

  // Batagelj-Brandes: walk the pairs (v, w), w < v, in row-major order and
  // jump ahead by Geometric(p) - 1 non-edges between consecutive edges.
  const double log_q = std::log1p(-p);
  const auto total_pairs = static_cast<double>(n) *
                           static_cast<double>(n > 0 ? n - 1 : 0) / 2.0;
  std::uint64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double skip = std::floor(std::log1p(-rng.uniform01()) / log_q);
    if (skip > total_pairs) break;
    w += 1 + static_cast<std::int64_t>(skip);
    while (v < n && w >= static_cast<std::int64_t>(v)) {
      w -= static_cast<std::int64_t>(v);
      ++v;
    }
    if (v < n) {
      edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
    }
  }
  return UndirectedGraph::from_edges(n, edges);
}

std::size_t hard_instance_core_size(const HardInstanceParams& params) {
  return 1 + params.level * params.group_size + params.hub_count;
}

HardInstance generate_hard_instance(const HardInstanceParams& params) {
  if (params.max_level < 2) throw ParameterError("max_level must be >= 2");
  if (params.level > params.max_level) {
    throw ParameterError("level must not exceed max_level");
  }
  if (params.group_size < 2) throw ParameterError("group_size must be >= 2");
  if (params.hub_count < 2) throw ParameterError("hub_count must be >= 2");
  const std::size_t core = hard_instance_core_size(params);
  if (params.pad_to_n < core) {
    throw ParameterError("pad_to_n=" + std::to_string(params.pad_to_n) +
                         " is smaller than the " + std::to_string(core) +
                         " nodes the construction needs");
  }

  // Unshuffled layout: 0 = t, then the level groups, then the hubs.
  std::vector<Edge> edges;
  auto add_clique_on_target = [&](NodeId first, std::size_t size) {
    for (std::size_t a = 0; a < size; ++a) {
      const auto u = static_cast<NodeId>(first + a);
      edges.emplace_back(0, u);
      for (std::size_t b = a + 1; b < size; ++b) {
        edges.emplace_back(u, static_cast<NodeId>(first + b));
      }
    }
  };
  NodeId next = 1;
  for (std::size_t j = 0; j < params.level; ++j) {
    add_clique_on_target(next, params.group_size);
    next += static_cast<NodeId>(params.group_size);
  }
  add_clique_on_target(next, params.hub_count);

  std::vector<NodeId> perm(params.pad_to_n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  Rng rng(params.seed);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return {UndirectedGraph::from_edges(params.pad_to_n, edges), perm[0]};
}

}  // namespace backmc
