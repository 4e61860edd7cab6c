#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "wiener/blocks.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/graph.hpp"

using namespace wiener;

namespace {

// brute-force cut-vertex count: delete each vertex, test connectivity
int brute_cut_count(const Graph& g) {
  const int n = g.order();
  if (n <= 2) return 0;
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  int cuts = 0;
  for (int v = 0; v < n; ++v) {
    Graph rest = induced_subgraph(g, full & ~(1ull << v));
    if (!is_connected(rest)) ++cuts;
  }
  return cuts;
}

const Block* block_with(const BlockCutDecomposition& bc,
                        std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (const Block& b : bc.blocks)
    if (b.vertices == vertices) return &b;
  return nullptr;
}

}  // namespace

TEST_CASE("path decomposition: edge blocks, interior cut vertices") {
  Graph p4 = build_path(4);
  BlockCutDecomposition bc = decompose(p4);
  REQUIRE(bc.blocks.size() == 3);
  CHECK(bc.cut_vertices == std::vector<int>{1, 2});
  const Block* end1 = block_with(bc, {0, 1});
  const Block* mid = block_with(bc, {1, 2});
  const Block* end2 = block_with(bc, {2, 3});
  REQUIRE(end1 != nullptr);
  REQUIRE(mid != nullptr);
  REQUIRE(end2 != nullptr);
  CHECK(end1->kind == BlockKind::kSPendant);
  CHECK(mid->kind == BlockKind::kNonPendant);
  CHECK(end2->kind == BlockKind::kSPendant);
  CHECK(is_pendant(end1->kind));
  CHECK(!is_pendant(mid->kind));
  CHECK(bc.s_pendant_vertices == std::vector<int>{0, 3});
  REQUIRE(bc.s_pendant_edges.size() == 2);
  CHECK(bc.s_pendant_edges[0] == std::pair<int, int>{1, 0});
  CHECK(bc.s_pendant_edges[1] == std::pair<int, int>{2, 3});
}

TEST_CASE("star blocks are pendant but not s-pendant") {
  BlockCutDecomposition bc = decompose(build_star(4));
  REQUIRE(bc.blocks.size() == 3);
  CHECK(bc.cut_vertices == std::vector<int>{0});
  for (const Block& b : bc.blocks) {
    CHECK(b.kind == BlockKind::kPendant);  // no non-pendant block to anchor to
    CHECK(b.vertices.size() == 2);
  }
  CHECK(bc.s_pendant_edges.empty());
}

TEST_CASE("2-connected graphs are a single non-pendant block") {
  for (const Graph& g : {build_cycle(5), Graph::from_edges(4, {{0, 1}, {1, 2},
                                                               {2, 3}, {3, 0},
                                                               {0, 2}})}) {
    BlockCutDecomposition bc = decompose(g);
    REQUIRE(bc.blocks.size() == 1);
    CHECK(bc.blocks[0].kind == BlockKind::kNonPendant);
    CHECK(bc.cut_vertices.empty());
    CHECK((int)bc.blocks[0].vertices.size() == g.order());
  }
  // K2: one block, no cut vertices
  BlockCutDecomposition k2 = decompose(build_path(2));
  REQUIRE(k2.blocks.size() == 1);
  CHECK(k2.blocks[0].kind == BlockKind::kNonPendant);
  // K1: no blocks at all
  CHECK(decompose(Graph(1)).blocks.empty());
  CHECK_THROWS_AS(decompose(Graph::from_edges(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("lollipop decomposition distinguishes s-pendant blocks") {
  Graph g = build_lollipop(8, 6);  // cycle 0..5, tail 0-6-7
  BlockCutDecomposition bc = decompose(g);
  REQUIRE(bc.blocks.size() == 3);
  CHECK(bc.cut_vertices == std::vector<int>{0, 6});
  const Block* cyc = block_with(bc, {0, 1, 2, 3, 4, 5});
  const Block* mid = block_with(bc, {0, 6});
  const Block* tip = block_with(bc, {6, 7});
  REQUIRE(cyc != nullptr);
  REQUIRE(mid != nullptr);
  REQUIRE(tip != nullptr);
  CHECK(cyc->is_cycle());
  CHECK(cyc->kind == BlockKind::kSPendant);
  CHECK(mid->kind == BlockKind::kNonPendant);
  CHECK(tip->kind == BlockKind::kSPendant);
  CHECK(cyc->edge_count == 6);
}

TEST_CASE("two cycles sharing a vertex: both pendant, neither s-pendant") {
  Graph g = build_dumbbell(4, 4, 7);
  BlockCutDecomposition bc = decompose(g);
  REQUIRE(bc.blocks.size() == 2);
  CHECK(bc.cut_vertices == std::vector<int>{0});
  for (const Block& b : bc.blocks) {
    CHECK(b.is_cycle());
    CHECK(b.kind == BlockKind::kPendant);
  }
}

TEST_CASE("cut-vertex counts match vertex-deletion brute force") {
  for (int n = 1; n <= 7; ++n)
    for_each_connected(n, [&](const Graph& g, const Certificate&) {
      CHECK(count_cut_vertices(g) == brute_cut_count(g));
    });
}

TEST_CASE("block distance is the minimum pairwise vertex distance") {
  Graph g = build_lollipop(8, 6);
  BlockCutDecomposition bc = decompose(g);
  const Block* cyc = block_with(bc, {0, 1, 2, 3, 4, 5});
  const Block* mid = block_with(bc, {0, 6});
  const Block* tip = block_with(bc, {6, 7});
  CHECK(block_distance(g, *cyc, *mid) == 0);  // share vertex 0
  CHECK(block_distance(g, *cyc, *tip) == 1);
  CHECK(block_distance(g, *mid, *tip) == 0);

  Graph p6 = build_path(6);
  BlockCutDecomposition pc = decompose(p6);
  const Block* a = block_with(pc, {0, 1});
  const Block* b = block_with(pc, {4, 5});
  CHECK(block_distance(p6, *a, *b) == 3);
}

TEST_CASE("minimally 2-connected recognition") {
  CHECK(is_minimally_two_connected(build_cycle(4)));
  CHECK(is_minimally_two_connected(build_cycle(9)));
  // theta graph: three internally disjoint paths between 0 and 2
  CHECK(is_minimally_two_connected(
      Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {0, 4}, {4, 2}})));
  // a chord makes the cycle non-minimal
  CHECK(!is_minimally_two_connected(
      Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
  CHECK(!is_minimally_two_connected(build_path(4)));  // not 2-connected at all
  // K3 = C3: deleting any edge leaves a path, so it is minimal
  CHECK(is_minimally_two_connected(
      Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK(!is_minimally_two_connected(Graph(1)));
}

TEST_CASE("block list is sorted and masks partition the edges") {
  for (int n = 3; n <= 7; ++n)
    for_each_connected(n, [&](const Graph& g, const Certificate&) {
      BlockCutDecomposition bc = decompose(g);
      int edge_total = 0;
      for (std::size_t i = 0; i < bc.blocks.size(); ++i) {
        edge_total += bc.blocks[i].edge_count;
        if (i > 0)
          CHECK(bc.blocks[i - 1].vertices.front() <=
                bc.blocks[i].vertices.front());
      }
      CHECK(edge_total == g.edge_count());
    });
}
