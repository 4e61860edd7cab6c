#pragma once
// Block-cut decomposition of connected graphs: maximal 2-connected subgraphs
// (a bridge counts as a K2 block), cut vertices, and the pendant taxonomy.
//
// A block is pendant when it contains exactly one cut vertex of the whole
// graph. A pendant block is s-pendant when its cut vertex lies in exactly one
// non-pendant block. K1 has no blocks; a graph that is itself 2-connected has
// one block which is neither pendant nor s-pendant.

#include <cstdint>
#include <utility>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

enum class BlockKind { kNonPendant, kPendant, kSPendant };

inline bool is_pendant(BlockKind k) { return k != BlockKind::kNonPendant; }

struct Block {
  std::vector<int> vertices;  // ascending
  int edge_count = 0;
  BlockKind kind = BlockKind::kNonPendant;

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int v : vertices) m |= 1ull << v;
    return m;
  }
  // 2-connected blocks are cycles exactly when |E| == |V|
  bool is_cycle() const {
    return vertices.size() >= 3 && edge_count == int(vertices.size());
  }
};

struct BlockCutDecomposition {
  std::vector<Block> blocks;  // sorted by vertex set (min vertex, then lex)
  std::vector<int> cut_vertices;  // ascending
  std::vector<std::pair<int, int>> s_pendant_edges;  // (cut vertex, pendant vertex)
  std::vector<int> s_pendant_vertices;  // pendant endpoint of each s-pendant edge
};

// throws DisconnectedError on disconnected input; K1 yields no blocks
BlockCutDecomposition decompose(const Graph& g);

int count_cut_vertices(const Graph& g);

// min over pairs of a vertex of b1 and a vertex of b2 of their distance
int block_distance(const Graph& g, const Block& b1, const Block& b2);

// 2-connected (n >= 3) and every single edge deletion breaks 2-connectivity
bool is_minimally_two_connected(const Graph& g);

namespace detail {

// bitmask of articulation vertices (lowpoint DFS, no decomposition)
std::uint64_t articulation_mask(const std::uint64_t* rows, int n);

}  // namespace detail

}  // namespace wiener
