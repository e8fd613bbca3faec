#pragma once

#include <cstddef>
#include <istream>
#include <string>

#include "backmc/graph.hpp"

namespace backmc {

struct LoadedGraph {
  UndirectedGraph graph;
  std::size_t duplicates_removed = 0;
};

// Plain-text edge list: one "u v" pair of 0-based ids per line, '#' starts a
// comment, and a "# n=<N>" comment raises the node count to N and bounds
// every id below it.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

// "# n=<n> m=<m>" followed by each edge once as "u v", u < v, sorted.
std::string write_edge_list(const UndirectedGraph& g);
void write_edge_list_file(const UndirectedGraph& g, const std::string& path);

}  // namespace backmc
