#pragma once

#include <cstdint>
#include <string>

#include "backmc/error.hpp"
#include "backmc/oracle.hpp"

namespace backmc {

struct WalkEnd {
  NodeId terminal = 0;
  std::uint64_t moves = 0;
};

// One alpha-discounted walk from u: stop with probability alpha, otherwise
// step to a uniform neighbor (one deg + one neigh query per step). A walk
// standing on a degree-0 node stops there.
template <GraphAccess Oracle>
WalkEnd sample_node(Oracle& oracle, NodeId u, double alpha) {
  if (u >= oracle.num_nodes()) {
    throw BoundsError("sample_node: node " + std::to_string(u) +
                      " out of range");
  }
  Rng& rng = oracle.rng();
  WalkEnd end{u, 0};
  while (!rng.bernoulli(alpha)) {
    const std::size_t d = oracle.deg(end.terminal);
    if (d == 0) break;
    end.terminal = oracle.neigh(end.terminal, rng.below(d));
    ++end.moves;
  }
  return end;
}

}  // namespace backmc
