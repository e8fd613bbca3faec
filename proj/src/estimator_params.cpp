#include "backmc/estimator_types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "backmc/error.hpp"

namespace backmc {
namespace {

bool in_open_unit(double x) { return x > 0.0 && x < 1.0; }

}  // namespace

void validate_config(const EstimatorConfig& cfg) {
  if (!in_open_unit(cfg.alpha)) throw ParameterError("alpha must lie in (0, 1)");
  if (!in_open_unit(cfg.c)) throw ParameterError("c must lie in (0, 1)");
  if (!in_open_unit(cfg.p_f)) throw ParameterError("p_f must lie in (0, 1)");
  if (cfg.walk_cap == 0) throw ParameterError("walk_cap must be positive");
}

std::uint64_t stable_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x))) {
    return static_cast<std::uint64_t>(std::max(0.0, r));
  }
  return static_cast<std::uint64_t>(std::max(0.0, std::ceil(x)));
}

std::uint64_t median_run_count(double p_f) {
  if (!in_open_unit(p_f)) throw ParameterError("p_f must lie in (0, 1)");
  std::uint64_t runs = std::max<std::uint64_t>(
      1, stable_ceil(18.0 * std::log(1.0 / p_f)));
  if (runs % 2 == 0) ++runs;
  return runs;
}

BackMCPlan plan_backmc(const GraphStats& stats, std::size_t d_t,
                       const EstimatorConfig& cfg) {
  validate_config(cfg);
  if (d_t == 0) {
    throw IsolatedTargetError(cfg.alpha / static_cast<double>(stats.num_nodes));
  }
  if (!stats.d_min_positive) {
    throw ParameterError("plan needs a graph with at least one edge");
  }
  const double alpha = cfg.alpha;
  const double d_min = static_cast<double>(*stats.d_min_positive);
  const double m = static_cast<double>(stats.num_edges);
  const double reach = std::min(static_cast<double>(d_t),
                                std::sqrt(m) / std::sqrt(2.0 * (1.0 - alpha)));
  const double walks = 3.0 / (cfg.c * cfg.c * alpha * d_min) * reach;
  return {std::max<std::uint64_t>(1, stable_ceil(walks)),
          median_run_count(cfg.p_f)};
}

double median_of_runs(std::span<const double> values) {
  if (values.empty()) throw ContractError("median of an empty list");
  if (values.size() % 2 == 0) {
    throw ContractError("median needs an odd number of runs");
  }
  std::vector<double> v(values.begin(), values.end());
  auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

double stopping_threshold(double c, double p_f) {
  if (!in_open_unit(c) || !in_open_unit(p_f)) {
    throw ParameterError("c and p_f must lie in (0, 1)");
  }
  return 4.0 * (std::numbers::e - 2.0) * (1.0 + c) * std::log(2.0 / p_f) /
         (c * c);
}

SetPushParams setpush_params(std::size_t n, std::size_t m, std::size_t d_t,
                             double alpha, double c) {
  if (!in_open_unit(alpha) || !in_open_unit(c)) {
    throw ParameterError("alpha and c must lie in (0, 1)");
  }
  if (n == 0 || m == 0 || d_t == 0) {
    throw ParameterError("SetPush needs n, m and d_t positive");
  }
  const double floor_mass = c * alpha / (2.0 * static_cast<double>(n));
  const auto levels = std::max<std::uint64_t>(
      1, stable_ceil(std::log(floor_mass) / std::log1p(-alpha)));
  const double scale = alpha * c * c / (12.0 * static_cast<double>(levels));
  const double theta =
      std::max(scale / static_cast<double>(d_t),
               scale * std::sqrt(2.0 * (1.0 - alpha) / static_cast<double>(m)));
  return {static_cast<std::size_t>(levels), theta};
}

double backward_push_rmax(double c, double alpha, std::size_t n) {
  if (!in_open_unit(alpha) || !(c > 0.0)) {
    throw ParameterError("alpha must lie in (0, 1) and c be positive");
  }
  return c * alpha / static_cast<double>(n);
}

}  // namespace backmc
