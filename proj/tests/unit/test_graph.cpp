#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "backmc/edge_list.hpp"
#include "backmc/error.hpp"
#include "backmc/generators.hpp"
#include "backmc/graph.hpp"

using namespace backmc;

namespace {

UndirectedGraph parse(const std::string& text, std::size_t* dups = nullptr) {
  std::istringstream in(text);
  LoadedGraph g = load_edge_list(in);
  if (dups) *dups = g.duplicates_removed;
  return g.graph;
}

UndirectedGraph star3() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}};
  return UndirectedGraph::from_edges(4, e);
}

}  // namespace

TEST_CASE("load_edge_list: single edge") {
  const auto g = parse("0 1");
  CHECK(g.num_nodes() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
  g.validate();
}

TEST_CASE("load_edge_list: duplicates are dropped and counted") {
  std::size_t dups = 0;
  const auto g = parse("0 1\n1 0\n0 1", &dups);
  CHECK(g.num_nodes() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(dups == 2);
}

TEST_CASE("load_edge_list: rejections") {
  SUBCASE("self-loop names the line") {
    try {
      parse("0 0");
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()) == "self-loop at line 1");
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("later self-loop") {
    try {
      parse("# comment\n0 1\n\n2 2\n");
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(e.line() == 4);
    }
  }
  SUBCASE("non-integer token") {
    CHECK_THROWS_AS(parse("0 x"), FormatError);
    CHECK_THROWS_AS(parse("0 -1"), FormatError);
    CHECK_THROWS_AS(parse("0 1.5"), FormatError);
    CHECK_THROWS_AS(parse("0 1 2"), FormatError);
  }
  SUBCASE("id beyond declared n") {
    CHECK_THROWS_AS(parse("# n=3\n0 3\n"), BoundsError);
  }
}

TEST_CASE("load_edge_list: header raises node count") {
  const auto g = parse("# n=5 m=1\n0 1\n");
  CHECK(g.num_nodes() == 5);
  CHECK(g.num_edges() == 1);
  CHECK(g.degree(4) == 0);
  // a header smaller than the ids seen is only allowed to raise n
  CHECK(parse("").num_nodes() == 0);
}

TEST_CASE("write_edge_list format") {
  CHECK(write_edge_list(parse("1 0")) == "# n=2 m=1\n0 1\n");
  const auto tri = parse("2 1\n0 2\n1 0\n");
  CHECK(write_edge_list(tri) == "# n=3 m=3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("write/load round trip is the identity") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = generate_er({100, 0.05, seed});
    CHECK(parse(write_edge_list(g)) == g);
  }
  // isolated trailing nodes survive through the header
  const auto hard = generate_hard_instance({1, 2, 4, 10, 50, 9}).graph;
  CHECK(parse(write_edge_list(hard)) == hard);
}

TEST_CASE("adjacency slices are sorted and symmetric") {
  const auto g = parse("3 0\n1 3\n0 2\n2 3\n0 1\n");
  g.validate();
  const auto nb = g.neighbors(3);
  CHECK(std::vector<NodeId>(nb.begin(), nb.end()) ==
        std::vector<NodeId>{0, 1, 2});
  std::size_t sum = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) sum += g.degree(u);
  CHECK(sum == 2 * g.num_edges());
}

TEST_CASE("from_edges rejects bad ids and self-loops") {
  const std::vector<Edge> out_of_range{{0, 5}};
  CHECK_THROWS_AS(UndirectedGraph::from_edges(3, out_of_range), BoundsError);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(UndirectedGraph::from_edges(3, loop), FormatError);
}

TEST_CASE("generate_er: p = 1 gives the complete graph") {
  const auto k4 = generate_er({4, 1.0, 7});
  CHECK(k4.num_edges() == 6);
  for (NodeId u = 0; u < 4; ++u) CHECK(k4.degree(u) == 3);
  k4.validate();
}

TEST_CASE("generate_er: deterministic per seed") {
  CHECK(generate_er({500, 0.02, 42}) == generate_er({500, 0.02, 42}));
  CHECK_FALSE(generate_er({500, 0.02, 42}) == generate_er({500, 0.02, 43}));
}

TEST_CASE("generate_er: parameter errors") {
  CHECK_THROWS_AS(generate_er({10, 0.0, 1}), ParameterError);
  CHECK_THROWS_AS(generate_er({10, 1.5, 1}), ParameterError);
  CHECK_THROWS_AS(generate_er({10, -0.1, 1}), ParameterError);
}

TEST_CASE("generate_er: edge count of a sparse large graph") {
  const std::size_t n = 100000;
  const double p = 10.0 / static_cast<double>(n);
  const auto g = generate_er({n, p, 2024});
  g.validate();
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  const double mean = pairs * p;
  const double sd = std::sqrt(pairs * p * (1 - p));
  CHECK(std::abs(static_cast<double>(g.num_edges()) - mean) < 5 * sd);
}

TEST_CASE("generate_er: per-pair Bernoulli law") {
  // n=30, p=0.3 over 2000 seeds: the mean edge count and every pair's
  // occupancy frequency must match independent Bernoulli(p) pairs.
  const std::size_t n = 30;
  const double p = 0.3;
  const int seeds = 2000;
  std::vector<int> pair_hits(n * n, 0);
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const auto g = generate_er({n, p, static_cast<std::uint64_t>(s)});
    total += static_cast<double>(g.num_edges());
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v : g.neighbors(u)) {
        if (v > u) ++pair_hits[u * n + v];
      }
    }
  }
  const double pairs = n * (n - 1) / 2.0;
  const double sigma = std::sqrt(pairs * p * (1 - p));
  CHECK(std::abs(total / seeds - pairs * p) < 4 * sigma / std::sqrt(seeds));

  const double pair_sd = std::sqrt(seeds * p * (1 - p));
  int outliers = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (std::abs(pair_hits[u * n + v] - seeds * p) > 5 * pair_sd) ++outliers;
    }
  }
  CHECK(outliers == 0);
}

TEST_CASE("generate_hard_instance: degree contract") {
  for (std::size_t level : {0u, 1u, 2u, 3u}) {
    CAPTURE(level);
    HardInstanceParams p{level, 3, 4, 10, 200, 5};
    const auto inst = generate_hard_instance(p);
    const auto& g = inst.graph;
    g.validate();
    CHECK(g.num_nodes() == 200);
    CHECK(g.degree(inst.target) == level * 4 + 10);
    std::size_t groups = 0, hubs = 0, isolated = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (u == inst.target) continue;
      const auto d = g.degree(u);
      if (d == 0) {
        ++isolated;
        continue;
      }
      // every non-isolated node is adjacent to t
      const auto nb = g.neighbors(u);
      CHECK(std::binary_search(nb.begin(), nb.end(), inst.target));
      if (d == 4) ++groups;
      else if (d == 10) ++hubs;
      else FAIL("unexpected degree " << d);
    }
    CHECK(groups == level * 4);
    CHECK(hubs == 10);
    CHECK(isolated == 200 - (1 + level * 4 + 10));
  }
}

TEST_CASE("generate_hard_instance: examples and errors") {
  CHECK(generate_hard_instance({2, 2, 4, 10, 100, 1})
            .graph.degree(generate_hard_instance({2, 2, 4, 10, 100, 1}).target) ==
        18);
  const auto l0 = generate_hard_instance({0, 2, 4, 10, 30, 3});
  CHECK(l0.graph.degree(l0.target) == 10);
  CHECK(generate_hard_instance({1, 2, 4, 10, 50, 8}).graph ==
        generate_hard_instance({1, 2, 4, 10, 50, 8}).graph);

  CHECK_THROWS_AS(generate_hard_instance({1, 2, 4, 10, 14, 0}), ParameterError);
  CHECK_NOTHROW(generate_hard_instance({1, 2, 4, 10, 15, 0}));
  CHECK_THROWS_AS(generate_hard_instance({3, 2, 4, 10, 100, 0}), ParameterError);
  CHECK_THROWS_AS(generate_hard_instance({0, 1, 4, 10, 100, 0}), ParameterError);
  CHECK_THROWS_AS(generate_hard_instance({0, 2, 1, 10, 100, 0}), ParameterError);
  CHECK_THROWS_AS(generate_hard_instance({0, 2, 4, 1, 100, 0}), ParameterError);
}

TEST_CASE("graph_stats") {
  SUBCASE("star") {
    const auto s = graph_stats(star3());
    REQUIRE(s.d_min_positive.has_value());
    CHECK(*s.d_min_positive == 1);
    CHECK(s.d_max == 3);
    CHECK(s.avg_degree == doctest::Approx(1.5));
    CHECK(s.num_isolated == 0);
  }
  SUBCASE("K4") {
    const auto s = graph_stats(generate_er({4, 1.0, 0}));
    CHECK(*s.d_min_positive == 3);
    CHECK(s.d_max == 3);
  }
  SUBCASE("hard instance padding") {
    const auto inst = generate_hard_instance({1, 2, 4, 10, 50, 0});
    const auto s = graph_stats(inst.graph);
    CHECK(s.num_isolated == 50 - (1 + 4 + 10));
    CHECK(*s.d_min_positive == 4);
  }
  SUBCASE("edgeless graph has no d_min") {
    const auto s = graph_stats(parse("# n=3\n"));
    CHECK_FALSE(s.d_min_positive.has_value());
    CHECK(s.num_isolated == 3);
  }
}
