// Acceptance gate: eight criteria covering table reproduction, distance and
// Wiener extremes, formula/BFS equivalence, inequality dominance, structural
// properties, enumeration counts, and byte-stable reports. Each criterion
// prints one PASS/FAIL line with its stated tolerance; the process exits 0
// only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "wiener/blocks.hpp"
#include "wiener/canonical.hpp"
#include "wiener/checks.hpp"
#include "wiener/cli.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/graph.hpp"
#include "wiener/search.hpp"

using namespace wiener;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int g_passed = 0;
int g_failed = 0;

void report(int idx, bool pass, const std::string& text) {
  (pass ? g_passed : g_failed)++;
  std::printf("criterion %d: %s — %s\n", idx, pass ? "PASS" : "FAIL",
              text.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

CertWord word_of(const Graph& g) {
  return certword_from_certificate(canonical_certificate(g));
}

// --- criterion 1: the three max-Wiener tables, exhaustively to n = 10 -------

void criterion_tables() {
  Timer small;
  for (int n = 4; n <= 8; ++n) class_sweep(n);
  double t_small = small.s();
  Timer nine;
  class_sweep(9);
  double t9 = nine.s();
  Timer ten;
  class_sweep(10);
  double t10 = ten.s();

  CheckOptions opt;
  opt.max_n = 10;
  opt.workers = 1;
  std::vector<CheckReport> rows[3] = {table_checks(1, opt), table_checks(2, opt),
                                      table_checks(3, opt)};
  const std::vector<std::int64_t> expect[3] = {
      {9, 16, 26},
      {18, 29, 44, 64, 88},
      {32, 48, 69, 96, 126, 166, 209, 264}};
  bool ok = true;
  for (int t = 0; t < 3; ++t) {
    if (rows[t].size() != expect[t].size()) ok = false;
    for (std::size_t i = 0; ok && i < rows[t].size(); ++i) {
      if (rows[t][i].status != CheckStatus::kPass) ok = false;
      if (rows[t][i].optimum != expect[t][i]) ok = false;
    }
  }
  bool in_budget = t_small <= 60 && t9 <= 900 && t10 <= 14400;
  report(1, ok && in_budget,
         "max-Wiener tables for 1, 2, and 3 cut vertices reproduced by "
         "exhaustive enumeration to n = 10 with their exact witness sets, "
         "plus the closed-form rows 166/209/264 at n = 11..13 (tolerance: "
         "exact integer equality and witness-set equality; runtime n <= 8: " +
             fmt(t_small) + " s <= 60 s, n = 9: " + fmt(t9) +
             " s <= 900 s, n = 10: " + fmt(t10) + " s <= 14400 s)");
}

// --- criterion 2: distance maxima equal the lollipop pendant closed form ----

void criterion_distance_maxima() {
  Timer t;
  bool ok = true;
  int pairs = 0;
  for (int n = 4; n <= 9; ++n)
    for (int k = 1; k <= n - 3; ++k) {
      ++pairs;
      std::uint64_t got = class_sweep(n).by_k[std::size_t(k)].max_distance;
      if (got !=
          std::uint64_t(formula_lollipop_pendant_distance(n, n - k)))
        ok = false;
    }
  report(2, ok && pairs == 21 && t.s() <= 1200,
         "exhaustive maximum vertex distance equals the lollipop tail-end "
         "closed form on all " + std::to_string(pairs) +
             " classes with 4 <= n <= 9, 1 <= k <= n-3 (tolerance: exact "
             "integer equality; runtime " + fmt(t.s()) + " s <= 1200 s)");
}

// --- criterion 3: uniqueness of the lollipop witness --------------------------

void criterion_unique_witnesses() {
  bool ok = true;
  for (int n = 7; n <= 10; ++n) {
    const std::vector<CertWord>& w = class_sweep(n).by_k[1].wiener_witnesses;
    if (w.size() != 1 || w[0] != word_of(build_lollipop(n, n - 1))) ok = false;
  }
  const std::vector<CertWord>& w2 = class_sweep(10).by_k[2].wiener_witnesses;
  if (w2.size() != 1 || w2[0] != word_of(build_lollipop(10, 8))) ok = false;
  report(3, ok,
         "the one-tail lollipop is the unique max-Wiener witness for "
         "(n, k=1), 7 <= n <= 10, and L(10,8) is unique for (10, 2) "
         "(tolerance: exact witness-set equality)");
}

// --- criterion 4: closed forms match BFS on built graphs --------------------

void criterion_formula_oracle() {
  Timer t;
  std::int64_t tuples = 0, bad = 0;
  auto check = [&](std::int64_t formula, std::uint64_t bfs) {
    ++tuples;
    if (formula != std::int64_t(bfs)) ++bad;
  };
  for (int n = 1; n <= 60; ++n) {
    Graph p = build_path(n);
    for (int i = 1; i <= n; ++i)
      check(formula_path_vertex_distance(n, i), vertex_distance(p, i - 1));
    check(formula_wiener_path(n), wiener_index(p));
  }
  for (int n = 3; n <= 60; ++n) {
    Graph c = build_cycle(n);
    check(formula_cycle_vertex_distance(n), vertex_distance(c, 0));
    check(formula_wiener_cycle(n), wiener_index(c));
  }
  for (int n = 3; n <= 60; ++n)
    for (int g = 3; g <= n; ++g) {
      Graph l = build_lollipop(n, g);
      check(formula_wiener_lollipop(n, g), wiener_index(l));
      if (g < n)
        check(formula_lollipop_pendant_distance(n, g),
              vertex_distance(l, n - 1));
    }
  for (int m1 = 3; m1 <= 57; ++m1)
    for (int m2 = 3; m1 + m2 <= 61; ++m2)
      for (int n = m1 + m2 - 1; n <= 60; ++n)
        check(formula_wiener_dumbbell(m1, m2, n),
              wiener_index(build_dumbbell(m1, m2, n)));
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 3; n <= 60; ++n)
      check(formula_wiener_lollipop_k(n, k),
            wiener_index(build_lollipop(n, n - k)));
  report(4, tuples >= 3000 && bad == 0 && t.s() <= 60,
         "every distance/Wiener closed form (path, cycle, lollipop, joined "
         "cycles, tail-end distance, specialised cubics) matches BFS on the "
         "built graph across " + std::to_string(tuples) +
             " parameter tuples with n <= 60, " + std::to_string(bad) +
             " mismatches (tolerance: exact integer equality, >= 3000 "
             "tuples; runtime " + fmt(t.s()) + " s <= 60 s)");
}

// --- criterion 5: inequality dominance over formula ranges to n = 80 --------
//
// The distance comparison needs vertex-distance maxima of joined-cycle
// graphs beyond the bitset order cap, so this criterion carries its own
// adjacency-list BFS oracle. Each cycle's mirror map is verified to be an
// automorphism, then BFS runs from one representative per mirror orbit.

struct Lists {
  int n = 0;
  int deg[96] = {};
  int adj[96][4] = {};
  void edge(int u, int v) {
    adj[u][deg[u]++] = v;
    adj[v][deg[v]++] = u;
  }
  bool has(int u, int v) const {
    for (int j = 0; j < deg[u]; ++j)
      if (adj[u][j] == v) return true;
    return false;
  }
};

// the dumbbell layout used by the library builders, as plain lists
Lists dumbbell_lists(int m1, int m2, int n) {
  Lists g;
  g.n = n;
  for (int i = 0; i < m1; ++i) g.edge(i, (i + 1) % m1);
  if (n == m1 + m2 - 1) {
    g.edge(0, m1);
    for (int i = m1; i < m1 + m2 - 2; ++i) g.edge(i, i + 1);
    g.edge(m1 + m2 - 2, 0);
  } else {
    for (int i = m1; i < m1 + m2; ++i) g.edge(i, i + 1 == m1 + m2 ? m1 : i + 1);
    int prev = 0;
    for (int i = m1 + m2; i < n; ++i) {
      g.edge(prev, i);
      prev = i;
    }
    g.edge(prev, m1);
  }
  return g;
}

bool is_automorphism(const Lists& g, const int* perm) {
  for (int u = 0; u < g.n; ++u)
    for (int j = 0; j < g.deg[u]; ++j)
      if (!g.has(perm[u], perm[g.adj[u][j]])) return false;
  return true;
}

std::int64_t list_dist_sum(const Lists& g, int src) {
  int dist[96], queue[96];
  for (int i = 0; i < g.n; ++i) dist[i] = -1;
  int head = 0, tail = 0;
  queue[tail++] = src;
  dist[src] = 0;
  std::int64_t sum = 0;
  while (head < tail) {
    int u = queue[head++];
    sum += dist[u];
    for (int j = 0; j < g.deg[u]; ++j) {
      int v = g.adj[u][j];
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue[tail++] = v;
      }
    }
  }
  return sum;
}

// max vertex distance of the joined-cycle graph, BFS from one vertex per
// mirror orbit; returns -1 when a mirror map fails the automorphism check
std::int64_t dumbbell_max_distance(int m1, int m2, int n) {
  Lists g = dumbbell_lists(m1, m2, n);
  int mirror1[96], mirror2[96];
  for (int v = 0; v < n; ++v) mirror1[v] = mirror2[v] = v;
  for (int i = 0; i < m1; ++i) mirror1[i] = (m1 - i) % m1;
  if (n == m1 + m2 - 1) {
    // second cycle runs 0, m1, m1+1, ..., m1+m2-2; position p > 0 is vertex
    // m1+p-1 and the mirror sends p to m2-p
    for (int p = 1; p < m2; ++p) mirror2[m1 + p - 1] = m1 + (m2 - p) - 1;
  } else {
    for (int j = 1; j < m2; ++j) mirror2[m1 + j] = m1 + (m2 - j);
  }
  if (!is_automorphism(g, mirror1) || !is_automorphism(g, mirror2)) return -1;

  std::int64_t best = 0;
  for (int i = 0; i <= m1 / 2; ++i)
    best = std::max(best, list_dist_sum(g, i));
  if (n == m1 + m2 - 1) {
    for (int p = 1; p <= m2 / 2; ++p)
      best = std::max(best, list_dist_sum(g, m1 + p - 1));
  } else {
    for (int j = 0; j <= m2 / 2; ++j)
      best = std::max(best, list_dist_sum(g, m1 + j));
  }
  for (int v = m1 + m2; v < n; ++v)  // path interior has no mirror partner
    best = std::max(best, list_dist_sum(g, v));
  return best;
}

// W of the two-pronged lollipop: L(n-2, n-4) plus two pendant edges at the
// tail end, one parity branch each
std::int64_t forked_wiener(std::int64_t n) {
  std::int64_t num = (n % 2 == 0) ? n * n * n - 4 * n * n + 56 * n - 152
                                  : n * n * n - 4 * n * n + 55 * n - 156;
  return num / 8;
}

Graph build_forked(int n) {
  Graph core = build_lollipop(n - 2, n - 4);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < core.order(); ++u)
    for (int v = u + 1; v < core.order(); ++v)
      if (core.has_edge(u, v)) e.emplace_back(u, v);
  e.emplace_back(n - 3, n - 2);
  e.emplace_back(n - 3, n - 1);
  return Graph::from_edges(n, e);
}

void criterion_inequalities() {
  Timer t;
  std::int64_t pairs = 0, bad = 0;

  // one cycle beats two joined through a shared vertex, same order
  for (int m1 = 3; m1 <= 78; ++m1)
    for (int m2 = 3; m1 + m2 - 1 <= 80; ++m2) {
      ++pairs;
      if (formula_wiener_cycle(m1 + m2 - 1) <=
          formula_wiener_dumbbell(m1, m2, m1 + m2 - 1))
        ++bad;
    }
  // one-cut-vertex classes: the lollipop beats every shared-vertex pair of
  // cycles on >= 4 vertices (triangle blocks are handled upstream of this
  // comparison, so they are outside its stated range)
  for (int m1 = 4; m1 <= 77; ++m1)
    for (int m2 = 4; m1 + m2 - 1 <= 80; ++m2) {
      ++pairs;
      const int n = m1 + m2 - 1;
      if (formula_wiener_lollipop(n, n - 1) <=
          formula_wiener_dumbbell(m1, m2, n))
        ++bad;
    }
  // two cut vertices: lollipop >= bridged pair, equality exactly at (4,4)
  for (int m1 = 4; m1 <= 76; ++m1)
    for (int m2 = 4; m1 + m2 <= 80; ++m2) {
      ++pairs;
      const int n = m1 + m2;
      std::int64_t lhs = formula_wiener_lollipop(n, n - 2);
      std::int64_t rhs = formula_wiener_dumbbell(m1, m2, n);
      bool tie_point = (m1 == 4 && m2 == 4);
      if (tie_point ? lhs != rhs : lhs <= rhs) ++bad;
    }
  // three cut vertices, n >= 14: strict dominance over one-edge-longer pairs
  for (int m1 = 4; m1 <= 75; ++m1)
    for (int m2 = 4; m1 + m2 + 1 <= 80; ++m2) {
      const int n = m1 + m2 + 1;
      if (n < 14) continue;
      ++pairs;
      if (formula_wiener_lollipop(n, n - 3) <=
          formula_wiener_dumbbell(m1, m2, n))
        ++bad;
    }
  // distance: the lollipop tail end beats every joined-cycle vertex
  for (int m1 = 3; m1 <= 77; ++m1)
    for (int m2 = 3; m1 + m2 - 1 <= 80; ++m2)
      for (int k = 1; m1 + m2 + k - 2 <= 80; ++k) {
        ++pairs;
        const int n = m1 + m2 + k - 2;
        std::int64_t rhs = dumbbell_max_distance(m1, m2, n);
        if (rhs < 0 || formula_lollipop_pendant_distance(n, n - k) <= rhs)
          ++bad;
      }
  // three cut vertices, n >= 14: the lollipop also beats the two-pronged
  // variant; its closed form is cross-checked by BFS on buildable orders
  for (int n = 14; n <= 80; ++n) {
    ++pairs;
    if (n <= 64 && forked_wiener(n) !=
                       std::int64_t(wiener_index(build_forked(n))))
      ++bad;
    if (formula_wiener_lollipop(n, n - 3) <= forked_wiener(n)) ++bad;
  }
  report(5, bad == 0 && t.s() <= 1.0,
         "Wiener and distance dominance inequalities hold over their stated "
         "parameter ranges to n = 80 (" + std::to_string(pairs) +
             " comparisons: cycle vs joined cycles, lollipop vs joined "
             "cycles at 1..3 cut vertices with the single tie at cycle "
             "lengths (4,4), tail-end distance vs every joined-cycle vertex, "
             "lollipop vs two-pronged variant for n >= 14), " +
             std::to_string(bad) + " violations (tolerance: exact integer "
             "comparisons; runtime " + fmt(t.s()) + " s <= 1 s)");
}

// --- criterion 6: structural properties, exhaustive to n = 8 ----------------

void criterion_structural() {
  Timer t;
  const char* names[] = {
      "edge-deletion-increases-wiener", "cut-vertex-split-identity",
      "min-2-connected-triangle-free", "farthest-blocks-are-pendant",
      "two-s-pendant-blocks"};
  CheckOptions opt;
  opt.max_n = 8;
  opt.workers = 1;
  bool ok = true;
  int rows = 0;
  for (const char* name : names)
    for (const CheckReport& r : run_check(name, opt)) {
      ++rows;
      if (r.status != CheckStatus::kPass) ok = false;
    }
  report(6, ok && t.s() <= 600,
         "structural properties verified on every connected graph with n <= "
         "8: deleting a non-bridge edge strictly raises the Wiener index, "
         "the cut-vertex split identities hold, classes with k >= 2 have >= "
         "2 simply-attached pendant blocks, farthest blocks are pendant, and "
         "minimally 2-connected graphs are triangle-free (" +
             std::to_string(rows) + " check rows, zero violations; runtime " +
             fmt(t.s()) + " s <= 600 s)");
}

// --- criterion 7: enumeration counts and class partition --------------------

void criterion_enumeration() {
  Timer t;
  const std::uint64_t expect[] = {6, 21, 112, 853, 11117, 261080};
  bool ok = true;
  for (int n = 4; n <= 9; ++n) {
    if (connected_certs(n).size() != expect[n - 4]) ok = false;
    std::vector<CertWord> merged;
    for (int k = 0; k <= n - 2; ++k)
      for_each_in_class(n, k, [&](const Graph&, const Certificate& cert) {
        merged.push_back(certword_from_certificate(cert));
      });
    std::sort(merged.begin(), merged.end());
    if (merged != connected_certs(n)) ok = false;
  }
  report(7, ok && t.s() <= 900,
         "connected-class counts for n = 4..9 equal 6/21/112/853/11117/"
         "261080 and the cut-vertex classes partition each certificate set "
         "exactly (tolerance: exact counts and multiset equality; runtime " +
             fmt(t.s()) + " s <= 900 s)");
}

// --- criterion 8: byte-stable reports across worker counts ------------------

void criterion_determinism() {
  auto run = [](const char* workers, std::string* out) {
    std::istringstream in("");
    std::ostringstream o, e;
    int rc = run_cli({"verify", "--table", "2", "--workers", workers}, in, o, e);
    *out = o.str();
    return rc;
  };
  std::string out1, out8;
  int rc1 = run("1", &out1);
  int rc8 = run("8", &out8);
  report(8, rc1 == 0 && rc8 == 0 && !out1.empty() && out1 == out8,
         "`verify --table 2` emits byte-identical reports and equal exit "
         "codes with --workers 1 and --workers 8 (tolerance: byte equality "
         "of standard output)");
}

}  // namespace

int main() {
  criterion_tables();
  criterion_distance_maxima();
  criterion_unique_witnesses();
  criterion_formula_oracle();
  criterion_inequalities();
  criterion_structural();
  criterion_enumeration();
  criterion_determinism();
  std::printf("acceptance: %d/8 criteria passed\n", g_passed);
  return g_failed == 0 ? 0 : 1;
}
