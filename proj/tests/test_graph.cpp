#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "wiener/graph.hpp"

using namespace wiener;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

// quadratic-time reference: Floyd-Warshall over an int matrix
std::vector<std::vector<int>> fw_distances(const Graph& g) {
  const int n = g.order(), inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) d[u][v] = 1;
  for (int m = 0; m < n; ++m)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        d[u][v] = std::min(d[u][v], std::min(inf, d[u][m] + d[m][v]));
  return d;
}

}  // namespace

TEST_CASE("edge bookkeeping on a hand-built path") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == ((1ull << 0) | (1ull << 2)));
}

TEST_CASE("construction rejects loops and bad vertices") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ParamError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ParamError);
  CHECK_THROWS_AS(Graph(0), ParamError);
  CHECK_THROWS_AS(Graph(65), ParamError);
  CHECK_NOTHROW(Graph(64));
  // duplicate edges collapse
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
}

TEST_CASE("with_edge and without_edge are persistent copies") {
  Graph g = Graph::from_edges(3, {{0, 1}});
  Graph h = g.with_edge(1, 2);
  CHECK(g.edge_count() == 1);
  CHECK(h.edge_count() == 2);
  Graph back = h.without_edge(1, 2);
  CHECK(back == g);
  CHECK_THROWS_AS(g.without_edge(1, 2), ParamError);
  CHECK_THROWS_AS(g.with_edge(1, 1), ParamError);
}

TEST_CASE("all-pairs distances match a Floyd-Warshall recomputation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + int(rng() % 15);
    Graph g = random_graph(n, 0.05 + 0.9 * (trial % 10) / 10.0, rng);
    DistanceMatrix dm = all_pairs_distances(g);
    auto ref = fw_distances(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (ref[u][v] >= (1 << 28)) {
          CHECK(!dm.reachable(u, v));
        } else {
          CHECK(dm.at(u, v) == ref[u][v]);
        }
      }
  }
}

TEST_CASE("vertex distance, Wiener index, peripherian on hand-checked graphs") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(vertex_distance(p4, 0) == 6);
  CHECK(vertex_distance(p4, 1) == 4);
  CHECK(wiener_index(p4) == 10);
  CHECK(peripherian_vertices(p4) == std::vector<int>{0, 3});

  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(wiener_index(c5) == 15);
  for (int v = 0; v < 5; ++v) CHECK(vertex_distance(c5, v) == 6);
  CHECK(peripherian_vertices(c5) == std::vector<int>{0, 1, 2, 3, 4});

  Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(vertex_distance(star, 0) == 3);
  CHECK(vertex_distance(star, 1) == 5);
  CHECK(wiener_index(star) == 9);
  CHECK(peripherian_vertices(star) == std::vector<int>{1, 2, 3});
}

TEST_CASE("wiener index equals half the vertex-distance total") {
  std::mt19937 rng(11);
  int connected_seen = 0;
  while (connected_seen < 40) {
    const int n = 3 + int(rng() % 12);
    Graph g = random_graph(n, 0.4, rng);
    if (!is_connected(g)) continue;
    ++connected_seen;
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v) total += vertex_distance(g, v);
    CHECK(total % 2 == 0);
    CHECK(wiener_index(g) == total / 2);
  }
}

TEST_CASE("distance queries reject disconnected graphs") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(!is_connected(g));
  CHECK_THROWS_AS(vertex_distance(g, 0), DisconnectedError);
  CHECK_THROWS_AS(wiener_index(g), DisconnectedError);
  CHECK_THROWS_AS(peripherian_vertices(g), DisconnectedError);
  DistanceMatrix dm = all_pairs_distances(g);  // matrix itself is fine
  CHECK(dm.at(0, 1) == 1);
  CHECK(!dm.reachable(0, 2));
  CHECK(is_connected(Graph(1)));
  CHECK(wiener_index(Graph(1)) == 0);
}

TEST_CASE("triangle detection") {
  CHECK(has_triangle(Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK(!has_triangle(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK(has_triangle(
      Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
  CHECK(!has_triangle(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
  CHECK(!has_triangle(Graph(1)));
}

TEST_CASE("edge deletion helper validates the edge") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Graph p4 = delete_edge(c4, 3, 0);
  CHECK(p4.edge_count() == 3);
  CHECK(is_connected(p4));
  CHECK_THROWS_AS(delete_edge(c4, 0, 2), ParamError);
}

TEST_CASE("gluing keeps the first graph's labels and appends the rest") {
  Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});     // path 0-1-2
  Graph b = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});  // triangle
  Graph g = glue_at(a, 2, b, 1);  // b's vertex 1 becomes a's vertex 2
  CHECK(g.order() == 5);
  // b0 -> 3, b2 -> 4 (b's order, skipping the glued vertex)
  Graph want =
      Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(g == want);
  CHECK_THROWS_AS(glue_at(a, 3, b, 0), ParamError);

  Graph k1(1);
  CHECK(glue_at(a, 1, k1, 0) == a);
  CHECK(glue_at(k1, 0, b, 2).order() == 3);
}

TEST_CASE("induced subgraph keeps relative order and reports old labels") {
  Graph p5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<int> old_label;
  Graph sub = induced_subgraph(p5, (1ull << 0) | (1ull << 2) | (1ull << 3),
                               &old_label);
  CHECK(sub.order() == 3);
  CHECK(old_label == std::vector<int>{0, 2, 3});
  CHECK(sub.edge_count() == 1);
  CHECK(sub.has_edge(1, 2));  // the old (2,3) edge
  CHECK(!sub.has_edge(0, 1));
}

TEST_CASE("low-level distance helpers flag unreachable vertices") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  std::uint8_t dist[Graph::kMaxOrder];
  const int reached = detail::bfs_dist(g.rows(), g.order(), 0, dist);
  CHECK(reached == 3);
  CHECK(dist[2] == 2);
  CHECK(dist[3] == 0xff);
  CHECK(detail::bfs_dist_sum(g.rows(), g.order(), 0) == -1);
  CHECK(!detail::rows_connected(g.rows(), g.order()));
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(detail::bfs_dist_sum(c4.rows(), 4, 0) == 4);
  CHECK(detail::rows_connected(c4.rows(), 4));
}
