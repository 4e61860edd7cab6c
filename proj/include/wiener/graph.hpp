#pragma once
// Small simple graphs (1 <= n <= 64) stored as one adjacency bitmask per
// vertex. Graphs are immutable values: "mutators" return fresh copies.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wiener {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// invalid argument to an operation or constructor (bad order, bad family
// parameters, missing edge, empty class, ...)
struct ParamError : GraphError {
  using GraphError::GraphError;
};

// operation requires a connected graph
struct DisconnectedError : GraphError {
  using GraphError::GraphError;
};

class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  explicit Graph(int n) : n_(check_order(n)), rows_(n, 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // rows must be symmetric with empty diagonal (checked)
  static Graph from_rows(int n, const std::uint64_t* rows);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u] >> v & 1;
  }
  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
  }
  int degree(int v) const;
  const std::uint64_t* rows() const { return rows_.data(); }

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  static int check_order(int n) {
    if (n < 1 || n > kMaxOrder)
      throw ParamError("graph order must be in [1, 64], got " + std::to_string(n));
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw ParamError("vertex " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n_) + ")");
  }

  int n_;
  std::vector<std::uint64_t> rows_;
};

// n x n distance matrix; unreachable pairs hold kUnreachable.
struct DistanceMatrix {
  static constexpr std::uint16_t kUnreachable = 0xffff;

  int n = 0;
  std::vector<std::uint16_t> d;

  std::uint16_t at(int i, int j) const { return d[std::size_t(i) * n + j]; }
  bool reachable(int i, int j) const { return at(i, j) != kUnreachable; }
};

DistanceMatrix all_pairs_distances(const Graph& g);

// sum of distances from v to all vertices; throws DisconnectedError
std::uint64_t vertex_distance(const Graph& g, int v);
// half the sum of all vertex distances; throws DisconnectedError
std::uint64_t wiener_index(const Graph& g);
// all vertices attaining max vertex_distance, ascending; throws DisconnectedError
std::vector<int> peripherian_vertices(const Graph& g);

bool is_connected(const Graph& g);
bool has_triangle(const Graph& g);

// removes an existing edge (ParamError if absent); result may be disconnected
Graph delete_edge(const Graph& g, int u, int v);

// disjoint union of a and b with vertex vb of b identified with va of a.
// a keeps its labels; b's other vertices follow in b's order.
Graph glue_at(const Graph& a, int va, const Graph& b, int vb);

// subgraph induced by the vertex set `mask`, relabeled to 0..popcount-1 in
// ascending vertex order; old_label (optional) receives new -> old.
Graph induced_subgraph(const Graph& g, std::uint64_t mask,
                       std::vector<int>* old_label = nullptr);

namespace detail {

// bits of x strictly above position v (shift-safe for v = 63)
inline std::uint64_t bits_above(std::uint64_t x, int v) {
  return v >= 63 ? 0 : x & (~0ull << (v + 1));
}

// BFS distances from src into dist[0..n); unreached vertices get 0xff.
// Returns the number of reached vertices.
int bfs_dist(const std::uint64_t* rows, int n, int src, std::uint8_t* dist);

// sum of BFS distances from src, or -1 if the graph is disconnected
std::int64_t bfs_dist_sum(const std::uint64_t* rows, int n, int src);

bool rows_connected(const std::uint64_t* rows, int n);

}  // namespace detail

}  // namespace wiener
