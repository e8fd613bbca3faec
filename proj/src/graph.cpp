#include "backmc/graph.hpp"

#include <algorithm>
#include <string>

#include "backmc/error.hpp"

namespace backmc {

UndirectedGraph UndirectedGraph::from_edges(std::size_t n,
                                            std::span<const Edge> edges,
                                            std::size_t* duplicates) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw BoundsError("edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") out of range for n=" +
                        std::to_string(n));
    }
    if (u == v) {
      throw FormatError("self-loop on node " + std::to_string(u));
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());
  if (duplicates) *duplicates = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());

  UndirectedGraph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.adjacency_.resize(2 * canon.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // With canon sorted by (u, v), each slice receives its larger neighbors in
  // ascending order, then its smaller neighbors in ascending order.
  for (auto [u, v] : canon) g.adjacency_[cursor[u]++] = v;
  for (auto [u, v] : canon) g.adjacency_[cursor[v]++] = u;
  for (std::size_t u = 0; u < n; ++u) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
    auto last_ = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
    auto mid = std::partition_point(first, last_, [u](NodeId w) { return w > u; });
    std::rotate(first, mid, last_);
  }
  return g;
}

void UndirectedGraph::validate() const {
  const std::size_t n = num_nodes();
  if (offsets_.empty() || offsets_.front() != 0) {
    throw ContractError("offsets[0] must be 0");
  }
  if (offsets_.back() != adjacency_.size() || adjacency_.size() % 2 != 0) {
    throw ContractError("offsets[n] must equal 2m");
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (offsets_[u + 1] < offsets_[u]) {
      throw ContractError("offsets decrease at node " + std::to_string(u));
    }
    auto nb = neighbors(static_cast<NodeId>(u));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n) {
        throw ContractError("neighbor out of range at node " +
                            std::to_string(u));
      }
      if (nb[i] == u) {
        throw ContractError("self-loop at node " + std::to_string(u));
      }
      if (i > 0 && nb[i - 1] >= nb[i]) {
        throw ContractError("slice of node " + std::to_string(u) +
                            " not strictly ascending");
      }
      auto back = neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(),
                              static_cast<NodeId>(u))) {
        throw ContractError("asymmetric edge " + std::to_string(u) + "-" +
                            std::to_string(nb[i]));
      }
    }
  }
}

GraphStats graph_stats(const UndirectedGraph& g) {
  GraphStats s;
  s.num_nodes = g.num_nodes();
  s.num_edges = g.num_edges();
  for (std::size_t u = 0; u < s.num_nodes; ++u) {
    const std::size_t d = g.degree(static_cast<NodeId>(u));
    if (d == 0) {
      ++s.num_isolated;
      continue;
    }
    s.d_max = std::max(s.d_max, d);
    if (!s.d_min_positive || d < *s.d_min_positive) s.d_min_positive = d;
  }
  s.avg_degree = s.num_nodes == 0 ? 0.0
                                   : 2.0 * static_cast<double>(s.num_edges) /
                                         static_cast<double>(s.num_nodes);
  return s;
}

}  // namespace backmc
