#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "backmc/error.hpp"
#include "backmc/harness.hpp"

namespace backmc {
namespace {

constexpr const char* kColumns[] = {
    "algo",        "dataset",    "target",        "alpha",
    "c",           "p_f",        "seed",          "estimate",
    "ground_truth", "rel_error", "deg_calls",     "neigh_calls",
    "jump_calls",  "total_queries", "walks",      "moves",
    "wall_time_ns", "error"};
constexpr std::size_t kNumColumns = std::size(kColumns);

std::string fmt_real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_real(const std::string& s) {
  if (s == "nan") return std::nan("");
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw FormatError("bad number '" + s + "'");
  return v;
}

std::uint64_t parse_count(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw FormatError("bad count '" + s + "'");
  }
  return v;
}

}  // namespace

std::string trial_csv_header() {
  std::string h;
  for (std::size_t i = 0; i < kNumColumns; ++i) {
    if (i) h += ',';
    h += kColumns[i];
  }
  return h;
}

void write_trial_csv(std::ostream& out,
                     const std::vector<TrialRecord>& rows) {
  out << trial_csv_header() << '\n';
  for (const TrialRecord& r : rows) {
    out << r.algo << ',' << r.dataset << ',' << r.target << ','
        << fmt_real(r.alpha) << ',' << fmt_real(r.c) << ',' << fmt_real(r.p_f)
        << ',' << r.seed << ',' << fmt_real(r.estimate) << ','
        << fmt_real(r.ground_truth) << ',' << fmt_real(r.rel_error) << ','
        << r.deg_calls << ',' << r.neigh_calls << ',' << r.jump_calls << ','
        << r.total_queries << ',' << r.walks << ',' << r.moves << ','
        << r.wall_time_ns << ',' << r.error << '\n';
  }
}

std::string trial_csv(const std::vector<TrialRecord>& rows) {
  std::ostringstream out;
  write_trial_csv(out, rows);
  return out.str();
}

std::vector<TrialRecord> read_trial_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != trial_csv_header()) {
    throw FormatError("missing or unexpected trial CSV header", 1);
  }
  std::vector<TrialRecord> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != kNumColumns) {
      throw FormatError("wrong field count at line " + std::to_string(lineno),
                        lineno);
    }
    TrialRecord r;
    try {
      r.algo = f[0];
      r.dataset = f[1];
      r.target = static_cast<NodeId>(parse_count(f[2]));
      r.alpha = parse_real(f[3]);
      r.c = parse_real(f[4]);
      r.p_f = parse_real(f[5]);
      r.seed = parse_count(f[6]);
      r.estimate = parse_real(f[7]);
      r.ground_truth = parse_real(f[8]);
      r.rel_error = parse_real(f[9]);
      r.deg_calls = parse_count(f[10]);
      r.neigh_calls = parse_count(f[11]);
      r.jump_calls = parse_count(f[12]);
      r.total_queries = parse_count(f[13]);
      r.walks = parse_count(f[14]);
      r.moves = parse_count(f[15]);
      r.wall_time_ns = parse_count(f[16]);
      r.error = f[17];
    } catch (const std::exception& e) {
      throw FormatError(std::string(e.what()) + " at line " +
                            std::to_string(lineno),
                        lineno);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& rows) {
  std::vector<SummaryRow> out;
  std::map<std::pair<std::string, double>, std::size_t> index;
  std::vector<std::size_t> misses;
  for (const TrialRecord& r : rows) {
    auto [it, fresh] = index.try_emplace({r.algo, r.c}, out.size());
    if (fresh) {
      SummaryRow s;
      s.algo = r.algo;
      s.c = r.c;
      out.push_back(s);
      misses.push_back(0);
    }
    SummaryRow& s = out[it->second];
    if (std::isnan(r.estimate)) {
      ++s.failed;
      continue;
    }
    ++s.trials;
    s.mean_rel_error += r.rel_error;
    s.mean_total_queries += static_cast<double>(r.total_queries);
    s.mean_wall_time_ns += static_cast<double>(r.wall_time_ns);
    if (r.rel_error > r.c) ++misses[it->second];
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    SummaryRow& s = out[i];
    if (s.trials == 0) continue;
    const double k = static_cast<double>(s.trials);
    s.mean_rel_error /= k;
    s.mean_total_queries /= k;
    s.mean_wall_time_ns /= k;
    s.failure_fraction = static_cast<double>(misses[i]) / k;
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "algo,c,trials,failed,mean_rel_error,mean_total_queries,"
         "mean_wall_time_ns,failure_fraction\n";
  for (const SummaryRow& s : rows) {
    out << s.algo << ',' << fmt_real(s.c) << ',' << s.trials << ','
        << s.failed << ',' << fmt_real(s.mean_rel_error) << ','
        << fmt_real(s.mean_total_queries) << ','
        << fmt_real(s.mean_wall_time_ns) << ','
        << fmt_real(s.failure_fraction) << '\n';
  }
  return out.str();
}

}  // namespace backmc
