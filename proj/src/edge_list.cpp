#include "backmc/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "backmc/error.hpp"

namespace backmc {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view tok) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

// Value of an "n=<N>" token inside a comment line, if any.
std::optional<std::uint64_t> header_node_count(std::string_view comment,
                                               std::size_t line) {
  for (auto tok : split_ws(comment)) {
    if (tok.substr(0, 2) != "n=") continue;
    auto v = parse_uint(tok.substr(2));
    if (!v) {
      throw FormatError("bad node-count header at line " +
                            std::to_string(line),
                        line);
    }
    return v;
  }
  return std::nullopt;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared_n;
  std::uint64_t max_id = 0;
  std::size_t max_id_line = 0;
  bool any_edge = false;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s(raw);
    auto first = std::find_if_not(s.begin(), s.end(), is_space);
    if (first == s.end()) continue;
    if (*first == '#') {
      if (auto n = header_node_count(s.substr(first - s.begin() + 1), line)) {
        declared_n = std::max(declared_n.value_or(0), *n);
      }
      continue;
    }
    auto toks = split_ws(s);
    if (toks.size() != 2) {
      throw FormatError("expected two node ids at line " + std::to_string(line),
                        line);
    }
    auto u = parse_uint(toks[0]);
    auto v = parse_uint(toks[1]);
    if (!u || !v) {
      throw FormatError("non-integer node id at line " + std::to_string(line),
                        line);
    }
    if (*u == *v) {
      throw FormatError("self-loop at line " + std::to_string(line), line);
    }
    if (std::max(*u, *v) > std::numeric_limits<NodeId>::max() - 1) {
      throw FormatError("node id too large at line " + std::to_string(line),
                        line);
    }
    if (!any_edge || std::max(*u, *v) > max_id) {
      max_id = std::max(*u, *v);
      max_id_line = line;
    }
    any_edge = true;
    edges.emplace_back(static_cast<NodeId>(*u), static_cast<NodeId>(*v));
  }

  std::uint64_t n = any_edge ? max_id + 1 : 0;
  if (declared_n) {
    if (any_edge && max_id >= *declared_n) {
      throw BoundsError("node id " + std::to_string(max_id) +
                        " >= declared n=" + std::to_string(*declared_n) +
                        " at line " + std::to_string(max_id_line));
    }
    n = *declared_n;
  }

  LoadedGraph out;
  out.graph = UndirectedGraph::from_edges(n, edges, &out.duplicates_removed);
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return load_edge_list(in);
}

std::string write_edge_list(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "# n=" << g.num_nodes() << " m=" << g.num_edges() << '\n';
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(static_cast<NodeId>(u))) {
      if (v > u) out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

void write_edge_list_file(const UndirectedGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << write_edge_list(g);
  if (!out) throw FormatError("write failed for " + path);
}

}  // namespace backmc
