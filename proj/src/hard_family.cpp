#include <algorithm>
#include <cstdio>
#include <sstream>

#include "backmc/error.hpp"
#include "backmc/generators.hpp"
#include "backmc/ground_truth.hpp"
#include "backmc/harness.hpp"

namespace backmc {

HardFamilyReport validate_hard_family(const HardInstanceParams& base,
                                      std::size_t max_level, double alpha) {
  if (max_level < 2) throw ParameterError("need at least levels 0..2");
  HardFamilyReport report;
  for (std::size_t level = 0; level <= max_level; ++level) {
    HardInstanceParams p = base;
    p.level = level;
    p.max_level = max_level;
    const HardInstance inst = generate_hard_instance(p);
    const ScoreVector pi = pagerank_power(inst.graph, alpha);
    report.target = inst.target;
    report.target_degrees.push_back(inst.graph.degree(inst.target));
    report.scores.push_back(pi[inst.target]);
  }
  report.strictly_increasing = true;
  for (std::size_t i = 1; i < report.scores.size(); ++i) {
    const double ratio = report.scores[i] / report.scores[i - 1];
    report.ratios.push_back(ratio);
    if (!(ratio > 1.0)) report.strictly_increasing = false;
  }
  report.delta =
      *std::min_element(report.ratios.begin(), report.ratios.end()) - 1.0;
  return report;
}

std::string format_report(const HardFamilyReport& report) {
  std::ostringstream out;
  char buf[64];
  out << "level,d_t,pi_t,ratio_to_previous\n";
  for (std::size_t i = 0; i < report.scores.size(); ++i) {
    out << i << ',' << report.target_degrees[i] << ',';
    std::snprintf(buf, sizeof buf, "%.17g", report.scores[i]);
    out << buf << ',';
    if (i > 0) {
      std::snprintf(buf, sizeof buf, "%.17g", report.ratios[i - 1]);
      out << buf;
    }
    out << '\n';
  }
  std::snprintf(buf, sizeof buf, "%.17g", report.delta);
  out << "# target=" << report.target << " delta=" << buf
      << " strictly_increasing=" << (report.strictly_increasing ? "yes" : "no")
      << '\n';
  return out.str();
}

}  // namespace backmc
