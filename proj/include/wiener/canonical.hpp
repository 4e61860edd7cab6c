#pragma once
// Canonical forms for isomorphism testing (n <= 32): the lexicographically
// minimal adjacency encoding over labelings consistent with an iterated
// (degree, distance-profile) partition refinement, found by individualization
// backtracking with automorphism-orbit pruning. Discovered automorphisms are
// kept, so callers also get the orbit partition of the automorphism group.

#include <array>
#include <cstdint>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

// backtracking node budget exhausted (pathological input)
struct BudgetError : GraphError {
  using GraphError::GraphError;
};

// [order byte][column-major upper-triangle bits of the canonically relabeled
// graph, packed MSB-first]. Equal certificates <=> isomorphic.
using Certificate = std::vector<std::uint8_t>;

constexpr int kMaxCertOrder = 32;
constexpr std::uint64_t kDefaultCanonBudget = 4'000'000;

struct CanonicalResult {
  Certificate cert;
  std::vector<int> position;  // vertex -> canonical position
  std::vector<int> vertex;    // canonical position -> vertex
  std::vector<int> orbit;     // vertex -> least vertex in its automorphism orbit
  std::uint64_t search_nodes = 0;
};

Certificate canonical_certificate(const Graph& g,
                                  std::uint64_t budget = kDefaultCanonBudget);
CanonicalResult canonicalize(const Graph& g,
                             std::uint64_t budget = kDefaultCanonBudget);
Graph graph_from_certificate(const Certificate& cert);

namespace detail {

// Reusable state for the low-level entry point (no allocation per call once
// the generator vector has warmed up).
struct CanonScratch {
  std::array<std::uint64_t, 8> enc{};  // bit t of the encoding at word bit 63-t
  std::uint8_t vert[kMaxCertOrder];    // position -> vertex
  std::uint8_t pos[kMaxCertOrder];     // vertex -> position
  std::uint8_t orbit[kMaxCertOrder];   // union-find parents, min-rooted
  std::vector<std::array<std::uint8_t, kMaxCertOrder>> gens;
  std::uint64_t nodes = 0;

  int find(int v) {
    while (orbit[v] != v) {
      orbit[v] = orbit[orbit[v]];
      v = orbit[v];
    }
    return v;
  }
};

// colors: optional initial coloring by ascending invariant class (nullptr ->
// computed via initial_coloring). Fills all CanonScratch fields.
void canonicalize_rows(const std::uint64_t* rows, int n,
                       const std::uint8_t* colors, CanonScratch& s,
                       std::uint64_t budget);

// (degree, sorted distance profile) classes numbered by ascending key.
// dist receives the n*n BFS distance table as a side effect (0xff = far).
int initial_coloring(const std::uint64_t* rows, int n, std::uint8_t* colors,
                     std::uint8_t* dist);

inline int cert_bits(int n) { return n * (n - 1) / 2; }
inline int cert_payload_bytes(int n) { return (cert_bits(n) + 7) / 8; }

}  // namespace detail

}  // namespace wiener
