#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>

#include "backmc/graph.hpp"
#include "backmc/rng.hpp"

namespace backmc {

struct QueryCounters {
  std::uint64_t deg_calls = 0;
  std::uint64_t neigh_calls = 0;
  std::uint64_t jump_calls = 0;

  std::uint64_t total() const noexcept {
    return deg_calls + neigh_calls + jump_calls;
  }
  friend bool operator==(const QueryCounters&, const QueryCounters&) = default;
};

inline QueryCounters operator-(const QueryCounters& a, const QueryCounters& b) {
  return {a.deg_calls - b.deg_calls, a.neigh_calls - b.neigh_calls,
          a.jump_calls - b.jump_calls};
}

// What an estimator may use to see a graph: the three counted queries, the
// (public) node count, and the oracle-owned random stream.
template <class O>
concept GraphAccess = requires(O& o, const O& co, NodeId u, std::size_t i) {
  { o.deg(u) } -> std::convertible_to<std::size_t>;
  { o.neigh(u, i) } -> std::convertible_to<NodeId>;
  { o.jump() } -> std::convertible_to<NodeId>;
  { co.num_nodes() } -> std::convertible_to<std::size_t>;
  { co.counters() } -> std::convertible_to<QueryCounters>;
  { o.rng() } -> std::same_as<Rng&>;
};

// Arc-centric access to an UndirectedGraph with exact query accounting.
// Single-owner: holds a random stream and counters, so never share one
// across threads. The graph itself may be shared freely.
class GraphOracle {
 public:
  GraphOracle(const UndirectedGraph& graph, std::uint64_t seed,
              std::uint64_t stream = 0)
      : graph_(&graph), rng_(seed, stream) {}
  GraphOracle(const UndirectedGraph& graph, Rng rng)
      : graph_(&graph), rng_(rng) {}

  std::size_t deg(NodeId u) {
    if (u >= graph_->num_nodes()) throw_bad_node("deg", u);
    ++counters_.deg_calls;
    return graph_->degree(u);
  }

  // i-th smallest neighbor of u, 0-based.
  NodeId neigh(NodeId u, std::size_t i) {
    if (u >= graph_->num_nodes()) throw_bad_node("neigh", u);
    auto nb = graph_->neighbors(u);
    if (i >= nb.size()) throw_bad_index(u, i, nb.size());
    ++counters_.neigh_calls;
    return nb[i];
  }

  // Uniform over all n nodes; one RNG draw.
  NodeId jump() {
    ++counters_.jump_calls;
    return static_cast<NodeId>(rng_.below(graph_->num_nodes()));
  }

  std::size_t num_nodes() const noexcept { return graph_->num_nodes(); }
  QueryCounters counters() const noexcept { return counters_; }
  void reset_counters() noexcept { counters_ = {}; }
  Rng& rng() noexcept { return rng_; }

 private:
  [[noreturn]] static void throw_bad_node(const char* op, NodeId u);
  [[noreturn]] static void throw_bad_index(NodeId u, std::size_t i,
                                           std::size_t degree);

  const UndirectedGraph* graph_;
  Rng rng_;
  QueryCounters counters_;
};

static_assert(GraphAccess<GraphOracle>);

}  // namespace backmc
