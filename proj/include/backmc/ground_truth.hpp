#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "backmc/graph.hpp"

namespace backmc {

enum class ScoreKind { PageRank, Ppr };

struct ScoreVector {
  std::vector<double> values;
  double alpha = 0.0;
  std::size_t iterations = 0;
  ScoreKind kind = ScoreKind::PageRank;
  std::optional<NodeId> source;  // set for Ppr

  double operator[](NodeId u) const { return values[u]; }
};

// ceil(log_{1-alpha}(1e-4 * alpha / n)): the fixed iteration count used for
// ground truth.
std::size_t default_iterations(double alpha, std::size_t n);

// Starts at 1/n everywhere and applies
//   pi <- (1 - alpha) * A D^{-1} pi + alpha / n
// `iterations` times. Degree-0 columns are zero, so their mass leaks and an
// isolated node scores exactly alpha / n.
ScoreVector pagerank_power(const UndirectedGraph& g, double alpha,
                           std::optional<std::size_t> iterations = {});

// Termination distribution of an alpha-discounted walk from `source`:
//   sum_{l<L} alpha (1-alpha)^l x_l + (1-alpha)^L x_L
// with x_0 = e_source and x_{l+1} = x_l P. The walk-survival tail after L
// steps is kept at x_L, so entries sum to 1 and averaging over sources gives
// exactly the L-step pagerank_power vector. A degree-0 node keeps its mass.
ScoreVector ppr_power(const UndirectedGraph& g, NodeId source, double alpha,
                      std::optional<std::size_t> iterations = {});

// |truth - estimate| / truth; truth must be positive.
double relative_error(double estimate, double truth);

// max(alpha/n, alpha d_u sqrt(2(1-alpha)) / (n sqrt(m))): the PageRank floor
// every node satisfies.
double pagerank_lower_bound(double alpha, std::size_t n, std::size_t m,
                            std::size_t degree);

}  // namespace backmc
