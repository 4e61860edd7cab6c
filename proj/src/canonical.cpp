#include "wiener/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>

namespace wiener {
namespace {

using detail::CanonScratch;

// Ordered partition in nauty style: lab is a permutation of the vertices,
// ptn[i] == 1 iff positions i and i+1 lie in the same cell.
struct Partition {
  std::uint8_t lab[kMaxCertOrder];
  std::uint8_t ptn[kMaxCertOrder];
};

struct Searcher {
  const std::uint64_t* rows;
  int n;
  std::uint64_t budget;
  CanonScratch* out;

  bool have_best = false;
  std::array<std::uint64_t, 8> best{};
  std::uint8_t best_lab[kMaxCertOrder] = {};

  // first `cols` columns of the upper-triangle encoding under lab
  void encode(const std::uint8_t* lab, int cols,
              std::array<std::uint64_t, 8>& enc) const {
    enc = {};
    int bit = 0;
    for (int j = 1; j < cols; ++j) {
      std::uint64_t rj = rows[lab[j]];
      for (int i = 0; i < j; ++i, ++bit)
        if (rj >> lab[i] & 1) enc[bit >> 6] |= 1ull << (63 - (bit & 63));
    }
  }

  static int compare_bits(const std::array<std::uint64_t, 8>& a,
                          const std::array<std::uint64_t, 8>& b, int bits) {
    int full = bits >> 6;
    for (int w = 0; w < full; ++w)
      if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
    int rem = bits & 63;
    if (rem != 0) {
      std::uint64_t mask = ~0ull << (64 - rem);
      std::uint64_t x = a[full] & mask;
      std::uint64_t y = b[full] & mask;
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  // Equitable refinement: split cells by neighbor counts into splitter cells
  // until stable. Queue holds cell start positions; a stale start still names
  // a (possibly shrunk) current cell, which is sound to re-use as splitter.
  void refine(Partition& p) const {
    std::uint8_t queue[kMaxCertOrder * 2];
    bool inq[kMaxCertOrder] = {};
    int qhead = 0, qtail = 0;
    auto push = [&](int s) {
      if (!inq[s]) {
        inq[s] = true;
        queue[qtail] = static_cast<std::uint8_t>(s);
        qtail = (qtail + 1) & (kMaxCertOrder * 2 - 1);
      }
    };
    for (int i = 0; i < n; ++i)
      if (i == 0 || p.ptn[i - 1] == 0) push(i);

    std::uint8_t cnt[kMaxCertOrder];
    while (qhead != qtail) {
      int s = queue[qhead];
      inq[s] = false;
      qhead = (qhead + 1) & (kMaxCertOrder * 2 - 1);

      std::uint64_t splitter = 0;
      for (int i = s;; ++i) {
        splitter |= 1ull << p.lab[i];
        if (p.ptn[i] == 0) break;
      }

      // cell ends always carry ptn == 0, including position n-1
      for (int cs = 0; cs < n;) {
        int ce = cs;
        while (p.ptn[ce] == 1) ++ce;
        if (ce > cs) {  // non-singleton cell [cs, ce]
          bool mixed = false;
          for (int i = cs; i <= ce; ++i) {
            cnt[i] = static_cast<std::uint8_t>(
                std::popcount(rows[p.lab[i]] & splitter));
            if (cnt[i] != cnt[cs]) mixed = true;
          }
          if (mixed) {
            // stable insertion sort of [cs, ce] by ascending count
            for (int i = cs + 1; i <= ce; ++i) {
              std::uint8_t cv = cnt[i], lv = p.lab[i];
              int j = i - 1;
              while (j >= cs && cnt[j] > cv) {
                cnt[j + 1] = cnt[j];
                p.lab[j + 1] = p.lab[j];
                --j;
              }
              cnt[j + 1] = cv;
              p.lab[j + 1] = lv;
            }
            for (int i = cs; i < ce; ++i) p.ptn[i] = cnt[i] == cnt[i + 1];
            for (int i = cs; i <= ce; ++i)
              if (i == cs || p.ptn[i - 1] == 0) push(i);
          }
        }
        cs = ce + 1;
      }
    }
  }

  // closure of u under generators fixing the first t lab positions pointwise;
  // true if it meets `tried`
  bool equivalent_tried(int u, std::uint64_t tried, const std::uint8_t* lab,
                        int t) const {
    if (tried == 0 || out->gens.empty()) return false;
    std::uint64_t prefix = 0;
    for (int i = 0; i < t; ++i) prefix |= 1ull << lab[i];
    std::uint64_t orb = 1ull << u;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& g : out->gens) {
        bool fixes = true;
        for (std::uint64_t m = prefix; m != 0; m &= m - 1)
          if (g[std::countr_zero(m)] !=
              static_cast<std::uint8_t>(std::countr_zero(m))) {
            fixes = false;
            break;
          }
        if (!fixes) continue;
        std::uint64_t img = 0;
        for (std::uint64_t m = orb; m != 0; m &= m - 1)
          img |= 1ull << g[std::countr_zero(m)];
        if ((img & ~orb) != 0) {
          orb |= img;
          grew = true;
        }
      }
      if ((orb & tried) != 0) return true;
    }
    return false;
  }

  void unite(int a, int b) {
    a = out->find(a);
    b = out->find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    out->orbit[b] = static_cast<std::uint8_t>(a);  // keep the least as root
  }

  void search(Partition p) {
    if (++out->nodes > budget)
      throw BudgetError("canonical form search exceeded its node budget");
    refine(p);

    int t = 0;  // length of the singleton prefix
    while (t < n && p.ptn[t] == 0) ++t;

    if (t == n) {  // leaf: a complete labeling
      std::array<std::uint64_t, 8> enc;
      encode(p.lab, n, enc);
      if (!have_best) {
        have_best = true;
        best = enc;
        std::memcpy(best_lab, p.lab, static_cast<std::size_t>(n));
        return;
      }
      int c = compare_bits(enc, best, detail::cert_bits(n));
      if (c < 0) {
        best = enc;
        std::memcpy(best_lab, p.lab, static_cast<std::size_t>(n));
      } else if (c == 0) {  // automorphism mapping best_lab[i] -> lab[i]
        std::array<std::uint8_t, kMaxCertOrder> g{};
        for (int i = 0; i < n; ++i) g[best_lab[i]] = p.lab[i];
        for (int i = 0; i < n; ++i) unite(best_lab[i], g[best_lab[i]]);
        out->gens.push_back(g);
      }
      return;
    }

    if (have_best) {
      std::array<std::uint64_t, 8> enc;
      encode(p.lab, t, enc);
      if (compare_bits(enc, best, detail::cert_bits(t)) > 0) return;
    }

    int e = t;  // target cell [t, e]
    while (p.ptn[e] == 1) ++e;
    std::uint8_t cand[kMaxCertOrder];
    int ncand = e - t + 1;
    std::memcpy(cand, p.lab + t, static_cast<std::size_t>(ncand));

    std::uint64_t tried = 0;
    for (int c = 0; c < ncand; ++c) {
      int u = cand[c];
      if (equivalent_tried(u, tried, p.lab, t)) continue;
      tried |= 1ull << u;

      Partition child = p;
      int at = t;
      while (child.lab[at] != u) ++at;
      std::swap(child.lab[t], child.lab[at]);
      // restore the rest of the cell to candidate order for determinism
      std::sort(child.lab + t + 1, child.lab + e + 1);
      child.ptn[t] = 0;
      search(child);
    }
  }
};

}  // namespace

namespace detail {

int initial_coloring(const std::uint64_t* rows, int n, std::uint8_t* colors,
                     std::uint8_t* dist) {
  assert(n >= 1 && n <= kMaxCertOrder);
  for (int v = 0; v < n; ++v) bfs_dist(rows, n, v, dist + v * n);

  // key(v) = [deg(v)] ++ sorted distance row
  std::uint8_t key[kMaxCertOrder][kMaxCertOrder + 1];
  for (int v = 0; v < n; ++v) {
    key[v][0] = static_cast<std::uint8_t>(std::popcount(rows[v]));
    std::memcpy(key[v] + 1, dist + v * n, static_cast<std::size_t>(n));
    std::sort(key[v] + 1, key[v] + 1 + n);
  }
  std::uint8_t order[kMaxCertOrder];
  for (int v = 0; v < n; ++v) order[v] = static_cast<std::uint8_t>(v);
  std::sort(order, order + n, [&](std::uint8_t a, std::uint8_t b) {
    int c = std::memcmp(key[a], key[b], static_cast<std::size_t>(n) + 1);
    return c != 0 ? c < 0 : a < b;
  });
  int ncolors = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 &&
        std::memcmp(key[order[i - 1]], key[order[i]],
                    static_cast<std::size_t>(n) + 1) != 0)
      ++ncolors;
    colors[order[i]] = static_cast<std::uint8_t>(ncolors);
  }
  return ncolors + 1;
}

void canonicalize_rows(const std::uint64_t* rows, int n,
                       const std::uint8_t* colors, CanonScratch& s,
                       std::uint64_t budget) {
  assert(n >= 1 && n <= kMaxCertOrder);
  s.enc = {};
  s.nodes = 0;
  s.gens.clear();
  for (int v = 0; v < n; ++v) s.orbit[v] = static_cast<std::uint8_t>(v);

  std::uint8_t local_colors[kMaxCertOrder];
  if (colors == nullptr) {
    std::uint8_t dist[kMaxCertOrder * kMaxCertOrder];
    initial_coloring(rows, n, local_colors, dist);
    colors = local_colors;
  }

  Partition p;
  for (int v = 0; v < n; ++v) p.lab[v] = static_cast<std::uint8_t>(v);
  std::sort(p.lab, p.lab + n, [&](std::uint8_t a, std::uint8_t b) {
    return colors[a] != colors[b] ? colors[a] < colors[b] : a < b;
  });
  for (int i = 0; i < n; ++i)
    p.ptn[i] = i + 1 < n && colors[p.lab[i]] == colors[p.lab[i + 1]];

  Searcher sr{rows, n, budget, &s};
  sr.search(p);
  assert(sr.have_best);

  s.enc = sr.best;
  for (int i = 0; i < n; ++i) {
    s.vert[i] = sr.best_lab[i];
    s.pos[sr.best_lab[i]] = static_cast<std::uint8_t>(i);
  }
  for (int v = 0; v < n; ++v) s.find(v);  // compress for callers
}

}  // namespace detail

namespace {

Certificate cert_from_scratch(const CanonScratch& s, int n) {
  Certificate c(static_cast<std::size_t>(1 + detail::cert_payload_bytes(n)));
  c[0] = static_cast<std::uint8_t>(n);
  for (int b = 0; b < detail::cert_payload_bytes(n); ++b) {
    int w = b >> 3;
    int shift = 56 - 8 * (b & 7);
    c[static_cast<std::size_t>(1 + b)] =
        static_cast<std::uint8_t>(s.enc[w] >> shift & 0xff);
  }
  return c;
}

}  // namespace

Certificate canonical_certificate(const Graph& g, std::uint64_t budget) {
  if (g.order() > kMaxCertOrder)
    throw ParamError("canonical forms support at most 32 vertices");
  CanonScratch s;
  detail::canonicalize_rows(g.rows(), g.order(), nullptr, s, budget);
  return cert_from_scratch(s, g.order());
}

CanonicalResult canonicalize(const Graph& g, std::uint64_t budget) {
  if (g.order() > kMaxCertOrder)
    throw ParamError("canonical forms support at most 32 vertices");
  CanonScratch s;
  detail::canonicalize_rows(g.rows(), g.order(), nullptr, s, budget);
  CanonicalResult r;
  r.cert = cert_from_scratch(s, g.order());
  r.position.resize(static_cast<std::size_t>(g.order()));
  r.vertex.resize(static_cast<std::size_t>(g.order()));
  r.orbit.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    r.position[static_cast<std::size_t>(v)] = s.pos[v];
    r.vertex[static_cast<std::size_t>(s.pos[v])] = v;
    r.orbit[static_cast<std::size_t>(v)] = s.find(v);
  }
  r.search_nodes = s.nodes;
  return r;
}

Graph graph_from_certificate(const Certificate& cert) {
  if (cert.empty()) throw ParamError("empty certificate");
  int n = cert[0];
  if (n < 1 || n > kMaxCertOrder) throw ParamError("bad certificate order");
  if (static_cast<int>(cert.size()) != 1 + detail::cert_payload_bytes(n))
    throw ParamError("bad certificate length");
  std::vector<std::pair<int, int>> edges;
  int i = 0, j = 1;
  for (int t = 0; t < detail::cert_bits(n); ++t) {
    int byte = t >> 3;
    int bit = 7 - (t & 7);
    if (cert[static_cast<std::size_t>(1 + byte)] >> bit & 1)
      edges.emplace_back(i, j);
    if (++i == j) {
      i = 0;
      ++j;
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace wiener
