#pragma once

#include <cstddef>
#include <cstdint>

#include "backmc/graph.hpp"

namespace backmc {

struct ErParams {
  std::size_t n = 0;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;
};

// G(n, p): every unordered pair is an edge independently with probability
// edge_prob. Sparse p uses geometric skipping over the pair sequence.
UndirectedGraph generate_er(const ErParams& params);

struct HardInstanceParams {
  std::size_t level = 0;      // i: number of low-degree groups attached to t
  std::size_t max_level = 2;  // p
  std::size_t group_size = 2;
  std::size_t hub_count = 2;
  std::size_t pad_to_n = 0;
  std::uint64_t seed = 0;
};

struct HardInstance {
  UndirectedGraph graph;
  NodeId target = 0;
};

// Nodes used before padding: t, level groups, and the hub clique.
std::size_t hard_instance_core_size(const HardInstanceParams& params);

// Lower-bound family member G^(level). The target t is joined to `level`
// cliques of group_size nodes and to one clique of hub_count nodes, so group
// nodes have degree group_size, hubs have degree hub_count and
// d_t = level * group_size + hub_count. The rest of the pad_to_n nodes are
// isolated, and all ids are shuffled with the seeded RNG.
HardInstance generate_hard_instance(const HardInstanceParams& params);

}  // namespace backmc
