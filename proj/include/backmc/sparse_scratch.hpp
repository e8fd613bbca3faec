#pragma once

#include <cstddef>
#include <vector>

#include "backmc/graph.hpp"

namespace backmc::detail {

// Dense value array plus the list of touched slots, so clearing costs
// O(touched) instead of O(n).
class SparseScratch {
 public:
  explicit SparseScratch(std::size_t n) : values_(n, 0.0), seen_(n, 0) {}

  double& operator[](NodeId u) {
    if (!seen_[u]) {
      seen_[u] = 1;
      touched_.push_back(u);
    }
    return values_[u];
  }
  double get(NodeId u) const { return values_[u]; }
  const std::vector<NodeId>& touched() const noexcept { return touched_; }

  void clear() {
    for (NodeId u : touched_) {
      values_[u] = 0.0;
      seen_[u] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<double> values_;
  std::vector<char> seen_;
  std::vector<NodeId> touched_;
};

}  // namespace backmc::detail
