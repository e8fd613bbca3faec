#include "backmc/oracle.hpp"

#include <string>

#include "backmc/error.hpp"

namespace backmc {

void GraphOracle::throw_bad_node(const char* op, NodeId u) {
  throw BoundsError(std::string(op) + ": node " + std::to_string(u) +
                    " out of range");
}

void GraphOracle::throw_bad_index(NodeId u, std::size_t i,
                                  std::size_t degree) {
  throw BoundsError("neigh: index " + std::to_string(i) + " >= degree " +
                    std::to_string(degree) + " of node " + std::to_string(u));
}

}  // namespace backmc
