#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "wiener/enumerate.hpp"
#include "wiener/graph.hpp"
#include "wiener/graph6.hpp"

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

}  // namespace

TEST_CASE("hand-derived encodings") {
  // 2 vertices, one edge: header 'A', single payload bit in the top position
  CHECK(graph6_encode(Graph::from_edges(2, {{0, 1}})) == "A_");
  CHECK(graph6_encode(Graph::from_edges(3, {{0, 1}, {1, 2}})) == "Bg");
  CHECK(graph6_encode(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
  CHECK(graph6_encode(Graph(1)) == "@");
  CHECK(graph6_decode("A_") == Graph::from_edges(2, {{0, 1}}));
  CHECK(graph6_decode("Bg") == Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(graph6_decode("@") == Graph(1));
}

TEST_CASE("decode is label-faithful, not merely up to isomorphism") {
  // the same abstract path on two labelings gives two different strings
  Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph b = Graph::from_edges(3, {{0, 2}, {2, 1}});
  CHECK(graph6_encode(a) != graph6_encode(b));
  CHECK(graph6_decode(graph6_encode(b)) == b);
}

TEST_CASE("round trip over every connected graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    for_each_connected(n, [&](const Graph& g, const Certificate&) {
      CHECK(graph6_decode(graph6_encode(g)) == g);
    });
}

TEST_CASE("round trip on random graphs, including disconnected ones") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + int(rng() % 40);
    Graph g = random_graph(n, (trial % 11) / 10.0, rng);
    const std::string s = graph6_encode(g);
    CHECK(graph6_decode(s) == g);
  }
}

TEST_CASE("extended header covers orders past 62") {
  std::mt19937 rng(5);
  for (int n : {63, 64}) {
    Graph g = random_graph(n, 0.1, rng);
    const std::string s = graph6_encode(g);
    CHECK(s.size() > 4);
    CHECK(s[0] == '~');
    CHECK(graph6_decode(s) == g);
  }
}

TEST_CASE("malformed lines are rejected with a reason") {
  CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("B!"), Graph6Error);      // char below '?'
  CHECK_THROWS_AS(graph6_decode("B\x7f"), Graph6Error);   // char above '~'
  CHECK_THROWS_AS(graph6_decode("D?"), Graph6Error);      // payload too short
  CHECK_THROWS_AS(graph6_decode("A_?"), Graph6Error);     // trailing garbage
  CHECK_THROWS_AS(graph6_decode("~??"), Graph6Error);     // truncated header
  // extended header declaring 65 vertices: beyond the supported order
  CHECK_THROWS_AS(graph6_decode("~?@@"), Graph6Error);

  try {
    graph6_decode("D?");
    CHECK(false);
  } catch (const Graph6Error& e) {
    CHECK(e.kind == Graph6Error::Kind::kTruncated);
    CHECK(e.line == 0);  // line numbers come from stream readers only
  }
}

TEST_CASE("padding bits must be zero") {
  // P3 is "Bg"; flipping a padding bit gives "Bh", which must not decode
  CHECK_THROWS_AS(graph6_decode("Bh"), Graph6Error);
}
