#pragma once
// Extremal searches: maximum Wiener index and maximum vertex distance over
// the class of connected graphs with a fixed order and cut vertex count.
// One enumeration pass per order computes all classes at once (serial and
// OpenMP folds); results are memoized per (order, workers).

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wiener/blocks.hpp"
#include "wiener/canonical.hpp"
#include "wiener/enumerate.hpp"

namespace wiener {

enum class Objective { kWiener, kVertexDistance };

struct ExtremalRecord {
  int n = 0;
  int k = 0;
  Objective objective = Objective::kWiener;
  std::uint64_t optimum = 0;
  std::vector<Certificate> witnesses;  // sorted, one per isomorphism class
  std::uint64_t class_size = 0;        // graphs in the (n, k) class
  double elapsed_ms = 0;
};

// both objectives of one (n, k) class, gathered in a single pass
struct ClassExtremes {
  std::uint64_t count = 0;
  std::uint64_t max_wiener = 0;
  std::vector<CertWord> wiener_witnesses;
  std::uint64_t max_distance = 0;
  std::vector<CertWord> distance_witnesses;
};

struct Sweep {
  int n = 0;
  std::vector<ClassExtremes> by_k;  // index k = 0 .. max(0, n-2)
  std::uint64_t total = 0;          // connected classes of order n
  double elapsed_ms = 0;
};

Sweep sweep_classes_serial(int n);
Sweep sweep_classes_parallel(int n, int workers);
const Sweep& class_sweep(int n, int workers = 1);  // memoized per (n, workers)

ExtremalRecord search_max_wiener(int n, int k, int workers = 1);
ExtremalRecord search_max_vertex_distance(int n, int k, int workers = 1);

// Fold the objective over graph6 lines instead of the generator. Lines must
// decode; graphs outside the (n, k) class are skipped and counted as such.
ExtremalRecord search_stream(Objective obj, std::istream& g6_lines, int n,
                             int k);

// Replace the interior of a pendant block on >= 4 vertices by a cycle
// through the same vertices; preserves order and the cut vertex count.
Graph surgery_pendant_block_to_cycle(const Graph& g, const Block& b);

}  // namespace wiener
