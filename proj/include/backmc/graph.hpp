#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace backmc {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Immutable simple undirected graph in CSR form. Each undirected edge is
// stored twice (once per endpoint); neighbor slices are sorted ascending.
class UndirectedGraph {
 public:
  UndirectedGraph() : offsets_(1, 0) {}

  // Builds from an unordered edge list. Duplicate edges (in either
  // orientation) are dropped and counted in `*duplicates` when given.
  // Throws FormatError on a self-loop and BoundsError on an id >= n.
  static UndirectedGraph from_edges(std::size_t n, std::span<const Edge> edges,
                                    std::size_t* duplicates = nullptr);

  std::size_t num_nodes() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::size_t degree(NodeId u) const noexcept {
    return static_cast<std::size_t>(offsets_[u + 1] - offsets_[u]);
  }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + offsets_[u], degree(u)};
  }

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const NodeId> adjacency() const noexcept { return adjacency_; }

  // Full scan of every structural invariant; throws ContractError naming the
  // first violation.
  void validate() const;

  friend bool operator==(const UndirectedGraph&,
                         const UndirectedGraph&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> adjacency_;
};

struct GraphStats {
  std::optional<std::size_t> d_min_positive;  // absent when m == 0
  std::size_t d_max = 0;
  double avg_degree = 0.0;
  std::size_t num_isolated = 0;
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
};

GraphStats graph_stats(const UndirectedGraph& g);

}  // namespace backmc
