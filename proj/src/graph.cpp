#include "wiener/graph.hpp"

#include <bit>
#include <cassert>
#include <cstring>

namespace wiener {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw ParamError("loop at vertex " + std::to_string(u));
    g.rows_[u] |= 1ull << v;
    g.rows_[v] |= 1ull << u;
  }
  return g;
}

Graph Graph::from_rows(int n, const std::uint64_t* rows) {
  Graph g(n);
  std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw ParamError("adjacency row exceeds graph order");
    if (rows[v] >> v & 1) throw ParamError("loop at vertex " + std::to_string(v));
    g.rows_[v] = rows[v];
  }
  for (int v = 0; v < n; ++v)
    for (std::uint64_t m = rows[v]; m; m &= m - 1)
      if (!(rows[std::countr_zero(m)] >> v & 1))
        throw ParamError("adjacency not symmetric");
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(rows_[v]);
  return total / 2;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(rows_[v]);
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParamError("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.rows_[u] |= 1ull << v;
  g.rows_[v] |= 1ull << u;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v))
    throw ParamError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} not present");
  Graph g = *this;
  g.rows_[u] &= ~(1ull << v);
  g.rows_[v] &= ~(1ull << u);
  return g;
}

namespace detail {

int bfs_dist(const std::uint64_t* rows, int n, int src, std::uint8_t* dist) {
  std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  std::memset(dist, 0xff, std::size_t(n));
  dist[src] = 0;
  std::uint64_t seen = 1ull << src;
  std::uint64_t frontier = seen;
  int reached = 1;
  std::uint8_t d = 0;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1)
      next |= rows[std::countr_zero(f)];
    next &= all & ~seen;
    ++d;
    for (std::uint64_t f = next; f; f &= f - 1)
      dist[std::countr_zero(f)] = d;
    reached += std::popcount(next);
    seen |= next;
    frontier = next;
  }
  return reached;
}

std::int64_t bfs_dist_sum(const std::uint64_t* rows, int n, int src) {
  std::uint8_t dist[Graph::kMaxOrder];
  if (bfs_dist(rows, n, src, dist) != n) return -1;
  std::int64_t sum = 0;
  for (int v = 0; v < n; ++v) sum += dist[v];
  return sum;
}

bool rows_connected(const std::uint64_t* rows, int n) {
  std::uint8_t dist[Graph::kMaxOrder];
  return bfs_dist(rows, n, 0, dist) == n;
}

}  // namespace detail

DistanceMatrix all_pairs_distances(const Graph& g) {
  int n = g.order();
  DistanceMatrix m;
  m.n = n;
  m.d.assign(std::size_t(n) * n, DistanceMatrix::kUnreachable);
  std::uint8_t dist[Graph::kMaxOrder];
  for (int v = 0; v < n; ++v) {
    detail::bfs_dist(g.rows(), n, v, dist);
    for (int u = 0; u < n; ++u)
      if (dist[u] != 0xff) m.d[std::size_t(v) * n + u] = dist[u];
  }
  return m;
}

std::uint64_t vertex_distance(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw ParamError("vertex " + std::to_string(v) + " out of range");
  std::int64_t s = detail::bfs_dist_sum(g.rows(), g.order(), v);
  if (s < 0) throw DisconnectedError("vertex_distance requires a connected graph");
  return std::uint64_t(s);
}

std::uint64_t wiener_index(const Graph& g) {
  int n = g.order();
  std::uint64_t total = 0;
  for (int v = 0; v < n; ++v) {
    std::int64_t s = detail::bfs_dist_sum(g.rows(), n, v);
    if (s < 0) throw DisconnectedError("wiener_index requires a connected graph");
    total += std::uint64_t(s);
  }
  return total / 2;
}

std::vector<int> peripherian_vertices(const Graph& g) {
  int n = g.order();
  std::uint64_t best = 0;
  std::vector<std::uint64_t> dv(n);
  for (int v = 0; v < n; ++v) {
    std::int64_t s = detail::bfs_dist_sum(g.rows(), n, v);
    if (s < 0)
      throw DisconnectedError("peripherian_vertices requires a connected graph");
    dv[v] = std::uint64_t(s);
    if (dv[v] > best) best = dv[v];
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (dv[v] == best) out.push_back(v);
  return out;
}

bool is_connected(const Graph& g) {
  return detail::rows_connected(g.rows(), g.order());
}

bool has_triangle(const Graph& g) {
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (std::uint64_t m = detail::bits_above(g.neighbors(u), u); m; m &= m - 1)
      if (g.neighbors(u) & g.neighbors(std::countr_zero(m))) return true;
  return false;
}

Graph delete_edge(const Graph& g, int u, int v) { return g.without_edge(u, v); }

Graph glue_at(const Graph& a, int va, const Graph& b, int vb) {
  if (va < 0 || va >= a.order() || vb < 0 || vb >= b.order())
    throw ParamError("glue vertex out of range");
  int n = a.order() + b.order() - 1;
  if (n > Graph::kMaxOrder) throw ParamError("glued graph exceeds order 64");
  // map b's vertices: vb -> va, others -> a.order(), a.order()+1, ...
  std::vector<int> map(b.order());
  int next = a.order();
  for (int v = 0; v < b.order(); ++v) map[v] = v == vb ? va : next++;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a.order(); ++u)
    for (std::uint64_t m = detail::bits_above(a.neighbors(u), u); m; m &= m - 1)
      edges.emplace_back(u, std::countr_zero(m));
  for (int u = 0; u < b.order(); ++u)
    for (std::uint64_t m = detail::bits_above(b.neighbors(u), u); m; m &= m - 1)
      edges.emplace_back(map[u], map[std::countr_zero(m)]);
  return Graph::from_edges(n, edges);
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask,
                       std::vector<int>* old_label) {
  int n = std::popcount(mask);
  if (n == 0) throw ParamError("induced subgraph needs a nonempty vertex set");
  std::vector<int> verts;
  for (std::uint64_t m = mask; m; m &= m - 1) verts.push_back(std::countr_zero(m));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(verts[i], verts[j])) edges.emplace_back(i, j);
  if (old_label) *old_label = verts;
  return Graph::from_edges(n, edges);
}

}  // namespace wiener
