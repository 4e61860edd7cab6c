#pragma once
// Named graph families and their closed-form distance invariants.
//
// Vertex numbering is fixed so outputs are reproducible:
//   path      0-1-...-(n-1)
//   cycle     0-1-...-(n-1)-0
//   star      center 0, leaves 1..n-1
//   lollipop  L(n,g): cycle 0..g-1, tail g..n-1 attached at 0; the pendant
//             vertex (when g < n) is n-1
//   dumbbell  C(m1,m2,n): first cycle 0..m1-1, second cycle on m1..m1+m2-1,
//             connecting path from 0 to m1 through m1+m2..n-1 (edge 0-m1 when
//             n = m1+m2; shared vertex 0 when n = m1+m2-1)
//
// Formulas are evaluated in 128-bit integer arithmetic; every division is
// checked exact and a remainder throws (it would mean a transcription bug).

#include <cstdint>

#include "wiener/graph.hpp"

namespace wiener {

enum class FamilyKind { kPath, kCycle, kStar, kLollipop, kDumbbell };

struct FamilySpec {
  FamilyKind kind;
  int n = 0;
  int g = 0;   // lollipop cycle length
  int m1 = 0;  // dumbbell cycle lengths
  int m2 = 0;
};

Graph build(const FamilySpec& spec);
Graph build_path(int n);
Graph build_cycle(int n);
Graph build_star(int n);
Graph build_lollipop(int n, int g);
Graph build_dumbbell(int m1, int m2, int n);

// D_{P_n}(v_i), 1-based i
std::int64_t formula_path_vertex_distance(int n, int i);
// W(P_n) = binomial(n+1, 3)
std::int64_t formula_wiener_path(int n);
// D_{C_n}(v), any vertex
std::int64_t formula_cycle_vertex_distance(int n);
std::int64_t formula_wiener_cycle(int n);
// W(L(n,g))
std::int64_t formula_wiener_lollipop(int n, int g);
// D of the pendant tail end of L(n,g), g < n
std::int64_t formula_lollipop_pendant_distance(int n, int g);
// W(C(m1,m2,n))
std::int64_t formula_wiener_dumbbell(int m1, int m2, int n);
// W(L(n, n-k)) via the specialised cubic, k in {1,2,3}
std::int64_t formula_wiener_lollipop_k(int n, int k);

namespace detail {

// division asserting zero remainder
std::int64_t exact_div(__int128 num, std::int64_t den);

}  // namespace detail

}  // namespace wiener
