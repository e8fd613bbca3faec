#include "backmc/ground_truth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "backmc/error.hpp"

namespace backmc {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
}

}  // namespace

std::size_t default_iterations(double alpha, std::size_t n) {
  check_alpha(alpha);
  if (n == 0) throw ParameterError("graph has no nodes");
  const double target = 1e-4 * alpha / static_cast<double>(n);
  const double steps = std::log(target) / std::log1p(-alpha);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(steps)));
}

// Iterates on e = pi - 1/n. With h_u = sum_{v in N(u)} (1/d_v - 1/d_u),
//   e_u <- (1-alpha) (h_u / n + sum_{v in N(u)} e_v / d_v)
// for d_u > 0, and e_u = (alpha - 1) / n for isolated u. h_u is exactly 0
// on a regular graph, so there every entry stays exactly 1/n.
ScoreVector pagerank_power(const UndirectedGraph& g, double alpha,
                           std::optional<std::size_t> iterations) {
  check_alpha(alpha);
  const std::size_t n = g.num_nodes();
  const std::size_t rounds = iterations ? *iterations
                                        : default_iterations(alpha, n);
  const double inv_n = 1.0 / static_cast<double>(n);

  std::vector<double> inv_deg(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto d = g.degree(static_cast<NodeId>(v));
    if (d > 0) inv_deg[v] = 1.0 / static_cast<double>(d);
  }
  std::vector<double> base(n);
  for (std::size_t u = 0; u < n; ++u) {
    auto nb = g.neighbors(static_cast<NodeId>(u));
    if (nb.empty()) {
      base[u] = (alpha - 1.0) * inv_n;
      continue;
    }
    double h = 0.0;
    for (NodeId v : nb) h += inv_deg[v] - inv_deg[u];
    base[u] = (1.0 - alpha) * h * inv_n;
  }

  std::vector<double> dev(n, 0.0);
  std::vector<double> share(n);
  std::vector<double> next(n);
  for (std::size_t it = 0; it < rounds; ++it) {
    for (std::size_t v = 0; v < n; ++v) share[v] = dev[v] * inv_deg[v];
    for (std::size_t u = 0; u < n; ++u) {
      auto nb = g.neighbors(static_cast<NodeId>(u));
      if (nb.empty()) {
        next[u] = base[u];
        continue;
      }
      double acc = 0.0;
      for (NodeId v : nb) acc += share[v];
      next[u] = base[u] + (1.0 - alpha) * acc;
    }
    dev.swap(next);
  }
  std::vector<double> pi(n);
  for (std::size_t u = 0; u < n; ++u) pi[u] = inv_n + dev[u];
  return {std::move(pi), alpha, rounds, ScoreKind::PageRank, std::nullopt};
}

ScoreVector ppr_power(const UndirectedGraph& g, NodeId source, double alpha,
                      std::optional<std::size_t> iterations) {
  check_alpha(alpha);
  const std::size_t n = g.num_nodes();
  if (source >= n) {
    throw BoundsError("ppr source " + std::to_string(source) +
                      " out of range");
  }
  const std::size_t rounds = iterations ? *iterations
                                        : default_iterations(alpha, n);

  std::vector<double> result(n, 0.0);
  if (g.degree(source) == 0) {
    result[source] = 1.0;
    return {std::move(result), alpha, rounds, ScoreKind::Ppr, source};
  }
  std::vector<double> x(n, 0.0);
  std::vector<double> next(n, 0.0);
  x[source] = 1.0;
  double survive = 1.0;  // (1 - alpha)^l
  for (std::size_t l = 0; l < rounds; ++l) {
    for (std::size_t v = 0; v < n; ++v) {
      if (x[v] != 0.0) result[v] += alpha * survive * x[v];
    }
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      if (x[v] == 0.0) continue;
      auto nb = g.neighbors(static_cast<NodeId>(v));
      if (nb.empty()) {
        next[v] += x[v];
        continue;
      }
      const double part = x[v] / static_cast<double>(nb.size());
      for (NodeId w : nb) next[w] += part;
    }
    x.swap(next);
    survive *= 1.0 - alpha;
  }
  for (std::size_t v = 0; v < n; ++v) result[v] += survive * x[v];
  return {std::move(result), alpha, rounds, ScoreKind::Ppr, source};
}

double relative_error(double estimate, double truth) {
  if (!(truth > 0.0)) throw ParameterError("relative error needs truth > 0");
  return std::abs(truth - estimate) / truth;
}

double pagerank_lower_bound(double alpha, std::size_t n, std::size_t m,
                            std::size_t degree) {
  const double nd = static_cast<double>(n);
  const double base = alpha / nd;
  if (m == 0) return base;
  const double local = alpha * static_cast<double>(degree) *
                       std::sqrt(2.0 * (1.0 - alpha)) /
                       (nd * std::sqrt(static_cast<double>(m)));
  return std::max(base, local);
}

}  // namespace backmc
