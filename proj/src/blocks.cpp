#include "wiener/blocks.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace wiener {

namespace detail {

namespace {

// iterative lowpoint DFS shared by articulation_mask and decompose
struct LowpointDfs {
  const std::uint64_t* rows;
  int n;
  int timer = 0;
  int disc[Graph::kMaxOrder];
  int low[Graph::kMaxOrder];
  int parent[Graph::kMaxOrder];
  std::uint64_t cuts = 0;
  // edge stack for block extraction (empty use is cheap)
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>>* block_edges;

  explicit LowpointDfs(const std::uint64_t* r, int order,
                       std::vector<std::vector<std::pair<int, int>>>* be)
      : rows(r), n(order), block_edges(be) {
    std::fill(disc, disc + n, -1);
  }

  void run(int root) {
    // explicit stack of (vertex, remaining-neighbor mask)
    int vstack[Graph::kMaxOrder];
    std::uint64_t rest[Graph::kMaxOrder];
    int top = 0;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    parent[root] = -1;
    vstack[0] = root;
    rest[0] = rows[root];
    while (top >= 0) {
      int u = vstack[top];
      if (rest[top]) {
        int v = std::countr_zero(rest[top]);
        rest[top] &= rest[top] - 1;
        if (disc[v] == -1) {
          if (u == root) ++root_children;
          if (block_edges) estack.emplace_back(u, v);
          disc[v] = low[v] = timer++;
          parent[v] = u;
          ++top;
          vstack[top] = v;
          rest[top] = rows[v] & ~(1ull << u);
        } else if (disc[v] < disc[u] && v != parent[u]) {
          if (block_edges) estack.emplace_back(u, v);
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        --top;
        if (top >= 0) {
          int p = vstack[top];
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) {
            if (p != root || root_children > 1) cuts |= 1ull << p;
            if (block_edges) {
              std::vector<std::pair<int, int>> edges;
              while (!estack.empty()) {
                auto e = estack.back();
                estack.pop_back();
                edges.push_back(e);
                if (e.first == p && e.second == u) break;
              }
              block_edges->push_back(std::move(edges));
            }
          }
        }
      }
    }
  }
};

}  // namespace

std::uint64_t articulation_mask(const std::uint64_t* rows, int n) {
  LowpointDfs dfs(rows, n, nullptr);
  dfs.run(0);
  return dfs.cuts;
}

}  // namespace detail

BlockCutDecomposition decompose(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("decompose requires a connected graph");
  int n = g.order();
  BlockCutDecomposition out;
  if (n == 1) return out;

  std::vector<std::vector<std::pair<int, int>>> block_edges;
  detail::LowpointDfs dfs(g.rows(), n, &block_edges);
  dfs.run(0);

  for (auto& edges : block_edges) {
    Block b;
    std::uint64_t mask = 0;
    for (auto [u, v] : edges) mask |= 1ull << u | 1ull << v;
    for (std::uint64_t m = mask; m; m &= m - 1)
      b.vertices.push_back(std::countr_zero(m));
    b.edge_count = int(edges.size());
    out.blocks.push_back(std::move(b));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  std::uint64_t cuts = dfs.cuts;
  for (std::uint64_t m = cuts; m; m &= m - 1)
    out.cut_vertices.push_back(std::countr_zero(m));

  // pendant = exactly one cut vertex in the block (never true for a lone block)
  int non_pendant_at[Graph::kMaxOrder] = {};
  for (auto& b : out.blocks) {
    int c = std::popcount(b.mask() & cuts);
    b.kind = c == 1 ? BlockKind::kPendant : BlockKind::kNonPendant;
  }
  for (auto& b : out.blocks)
    if (b.kind == BlockKind::kNonPendant)
      for (int v : b.vertices)
        if (cuts >> v & 1) ++non_pendant_at[v];
  for (auto& b : out.blocks) {
    if (b.kind != BlockKind::kPendant) continue;
    int w = -1;
    for (int v : b.vertices)
      if (cuts >> v & 1) w = v;
    if (non_pendant_at[w] == 1) b.kind = BlockKind::kSPendant;
  }
  for (auto& b : out.blocks) {
    if (b.kind != BlockKind::kSPendant || b.vertices.size() != 2) continue;
    int w = (cuts >> b.vertices[0] & 1) ? b.vertices[0] : b.vertices[1];
    int p = b.vertices[0] == w ? b.vertices[1] : b.vertices[0];
    out.s_pendant_edges.emplace_back(w, p);
    out.s_pendant_vertices.push_back(p);
  }
  std::sort(out.s_pendant_vertices.begin(), out.s_pendant_vertices.end());
  return out;
}

int count_cut_vertices(const Graph& g) {
  if (!is_connected(g))
    throw DisconnectedError("count_cut_vertices requires a connected graph");
  if (g.order() == 1) return 0;
  return std::popcount(detail::articulation_mask(g.rows(), g.order()));
}

int block_distance(const Graph& g, const Block& b1, const Block& b2) {
  DistanceMatrix d = all_pairs_distances(g);
  int best = -1;
  for (int u : b1.vertices)
    for (int v : b2.vertices) {
      if (!d.reachable(u, v)) continue;
      int duv = d.at(u, v);
      if (best < 0 || duv < best) best = duv;
    }
  if (best < 0) throw DisconnectedError("blocks lie in different components");
  return best;
}

namespace {

bool two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) &&
         detail::articulation_mask(g.rows(), g.order()) == 0;
}

}  // namespace

bool is_minimally_two_connected(const Graph& g) {
  if (!two_connected(g)) return false;
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (std::uint64_t m = detail::bits_above(g.neighbors(u), u); m; m &= m - 1)
      if (two_connected(g.without_edge(u, std::countr_zero(m)))) return false;
  return true;
}

}  // namespace wiener
