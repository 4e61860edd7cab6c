#include "wiener/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <istream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wiener/blocks.hpp"
#include "wiener/graph6.hpp"

namespace wiener {

namespace detail {

void unpack_certword(CertWord w, int n, std::uint64_t* rows) {
  for (int v = 0; v < n; ++v) rows[v] = 0;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (w >> (63 - bit) & 1) {
        rows[i] |= 1ull << j;
        rows[j] |= 1ull << i;
      }
}

}  // namespace detail

namespace {

using detail::unpack_certword;

constexpr int kMaxWordOrder = 11;  // 55 upper-triangle bits fit one word

struct GenScratch {
  detail::CanonScratch canon;
  std::uint8_t colors[kMaxCertOrder];
  std::uint8_t dist[kMaxCertOrder * kMaxCertOrder];
};

// Child = parent plus vertex z joined to a nonempty neighbor set. Keep the
// child iff z lies in the automorphism orbit of the canonical deletion
// vertex: the vertex at the highest canonical position among non-cut
// vertices of the top invariant class. Every class on m vertices is then
// produced from exactly one (parent class, neighbor-set orbit) pair.
bool accept_child(const std::uint64_t* rows, int m, GenScratch& gs,
                  CertWord* cert) {
  std::uint64_t cuts = detail::articulation_mask(rows, m);
  int z = m - 1;
  assert((cuts >> z & 1) == 0);  // deleting z gives the connected parent

  detail::initial_coloring(rows, m, gs.colors, gs.dist);
  int cmax = -1;
  for (int v = 0; v < m; ++v)
    if ((cuts >> v & 1) == 0 && gs.colors[v] > cmax) cmax = gs.colors[v];
  if (gs.colors[z] != cmax) return false;  // z can never be at the top

  detail::canonicalize_rows(rows, m, gs.colors, gs.canon, kDefaultCanonBudget);
  int vstar = -1, best_pos = -1;
  for (int v = 0; v < m; ++v)
    if ((cuts >> v & 1) == 0 && gs.colors[v] == cmax &&
        gs.canon.pos[v] > best_pos) {
      best_pos = gs.canon.pos[v];
      vstar = v;
    }
  if (gs.canon.find(z) != gs.canon.find(vstar)) return false;
  *cert = gs.canon.enc[0];
  return true;
}

// image of a vertex-subset mask under a generator permutation
std::uint32_t apply_gen(const std::array<std::uint8_t, kMaxCertOrder>& g,
                        std::uint32_t mask) {
  std::uint32_t img = 0;
  while (mask != 0) {
    img |= 1u << g[std::countr_zero(mask)];
    mask &= mask - 1;
  }
  return img;
}

void expand_parent(CertWord parent, int pm, GenScratch& gs,
                   std::vector<CertWord>& out) {
  std::uint64_t rows[kMaxWordOrder];
  unpack_certword(parent, pm, rows);
  detail::canonicalize_rows(rows, pm, nullptr, gs.canon, kDefaultCanonBudget);
  std::vector<std::array<std::uint8_t, kMaxCertOrder>> gens =
      std::move(gs.canon.gens);

  // visit one neighbor set per Aut(parent) orbit of nonempty subsets
  std::uint64_t seen[1 << (kMaxGenOrder - 4)] = {};  // 2^pm bits, pm <= 9
  std::uint32_t stack[1 << (kMaxGenOrder - 1)];
  std::uint32_t limit = 1u << pm;
  for (std::uint32_t s = 1; s < limit; ++s) {
    if (seen[s >> 6] >> (s & 63) & 1) continue;
    if (!gens.empty()) {  // mark the whole orbit of s
      int top = 0;
      stack[top++] = s;
      seen[s >> 6] |= 1ull << (s & 63);
      while (top > 0) {
        std::uint32_t cur = stack[--top];
        for (const auto& g : gens) {
          std::uint32_t img = apply_gen(g, cur);
          if ((seen[img >> 6] >> (img & 63) & 1) == 0) {
            seen[img >> 6] |= 1ull << (img & 63);
            stack[top++] = img;
          }
        }
      }
    }

    std::uint64_t child[kMaxWordOrder];
    for (int v = 0; v < pm; ++v)
      child[v] = rows[v] | (static_cast<std::uint64_t>(s >> v & 1) << pm);
    child[pm] = s;
    CertWord cert;
    if (accept_child(child, pm + 1, gs, &cert)) out.push_back(cert);
  }
}

void sort_and_check_unique(std::vector<CertWord>& level, int m) {
  std::sort(level.begin(), level.end());
  if (std::adjacent_find(level.begin(), level.end()) != level.end())
    throw std::logic_error("duplicate certificate generated at order " +
                           std::to_string(m));
}

void check_gen_order(int n) {
  if (n < 1 || n > kMaxGenOrder)
    throw ParamError("generation supports orders 1.." +
                     std::to_string(kMaxGenOrder) + ", got " +
                     std::to_string(n));
}

}  // namespace

Graph graph_from_certword(CertWord w, int n) {
  if (n < 1 || n > kMaxWordOrder)
    throw ParamError("certificate words support orders 1..11");
  if ((w & ~0ull >> detail::cert_bits(n)) != 0)
    throw ParamError("certificate word has stray bits below the triangle");
  std::uint64_t rows[kMaxWordOrder];
  unpack_certword(w, n, rows);
  return Graph::from_rows(n, rows);
}

Certificate certificate_from_certword(CertWord w, int n) {
  if (n < 1 || n > kMaxWordOrder)
    throw ParamError("certificate words support orders 1..11");
  Certificate c(static_cast<std::size_t>(1 + detail::cert_payload_bytes(n)));
  c[0] = static_cast<std::uint8_t>(n);
  for (int b = 0; b < detail::cert_payload_bytes(n); ++b)
    c[static_cast<std::size_t>(1 + b)] =
        static_cast<std::uint8_t>(w >> (56 - 8 * b) & 0xff);
  return c;
}

CertWord certword_from_certificate(const Certificate& cert) {
  if (cert.empty() || cert[0] < 1 || cert[0] > kMaxWordOrder)
    throw ParamError("certificate word conversion needs order 1..11");
  int n = cert[0];
  if (static_cast<int>(cert.size()) != 1 + detail::cert_payload_bytes(n))
    throw ParamError("bad certificate length");
  CertWord w = 0;
  for (int b = 0; b < detail::cert_payload_bytes(n); ++b)
    w |= static_cast<CertWord>(cert[static_cast<std::size_t>(1 + b)])
         << (56 - 8 * b);
  return w;
}

std::vector<CertWord> connected_certs_serial(int n) {
  check_gen_order(n);
  std::vector<CertWord> level{0};  // the one-vertex graph
  GenScratch gs;
  for (int m = 2; m <= n; ++m) {
    std::vector<CertWord> next;
    for (CertWord p : level) expand_parent(p, m - 1, gs, next);
    sort_and_check_unique(next, m);
    level = std::move(next);
  }
  return level;
}

std::vector<CertWord> connected_certs_parallel(int n, int workers) {
  check_gen_order(n);
  if (workers < 1) throw ParamError("workers must be >= 1");
  std::vector<CertWord> level{0};
#ifdef _OPENMP
  for (int m = 2; m <= n; ++m) {
    std::vector<CertWord> next;
    std::int64_t count = static_cast<std::int64_t>(level.size());
#pragma omp parallel num_threads(workers)
    {
      GenScratch gs;
      std::vector<CertWord> local;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < count; ++i)
        expand_parent(level[static_cast<std::size_t>(i)], m - 1, gs, local);
#pragma omp critical
      next.insert(next.end(), local.begin(), local.end());
    }
    sort_and_check_unique(next, m);
    level = std::move(next);
  }
  return level;
#else
  (void)workers;
  return connected_certs_serial(n);
#endif
}

const std::vector<CertWord>& connected_certs(int n, int workers) {
  check_gen_order(n);
  static std::mutex mu;
  static std::map<int, std::vector<CertWord>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) {
    auto certs = workers > 1 ? connected_certs_parallel(n, workers)
                             : connected_certs_serial(n);
    it = memo.emplace(n, std::move(certs)).first;
  }
  return it->second;
}

void for_each_connected(
    int n, const std::function<void(const Graph&, const Certificate&)>& sink) {
  for (CertWord w : connected_certs(n))
    sink(graph_from_certword(w, n), certificate_from_certword(w, n));
}

void for_each_in_class(
    int n, int k,
    const std::function<void(const Graph&, const Certificate&)>& sink) {
  check_gen_order(n);
  int kmax = n >= 2 ? n - 2 : 0;
  if (k < 0 || k > kmax)
    throw ParamError("cut vertex count must be in 0.." + std::to_string(kmax) +
                     " for order " + std::to_string(n));
  for (CertWord w : connected_certs(n)) {
    std::uint64_t rows[kMaxWordOrder];
    unpack_certword(w, n, rows);
    if (std::popcount(detail::articulation_mask(rows, n)) != k) continue;
    sink(graph_from_certword(w, n), certificate_from_certword(w, n));
  }
}

IngestSummary ingest_graph6(std::istream& in, const IngestOptions& opt,
                            const std::function<void(const Graph&)>& sink) {
  IngestSummary sum;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++sum.lines;
    Graph g(1);
    try {
      g = graph6_decode(line);
    } catch (Graph6Error& e) {
      e.line = lineno;
      if (opt.strict) throw;
      sum.issues.push_back({lineno, e.what()});
      continue;
    }
    bool keep = true;
    if (opt.require_order != 0 && g.order() != opt.require_order) keep = false;
    if (keep && opt.connected_only && !is_connected(g)) keep = false;
    if (keep && opt.require_cut_count >= 0) {
      if (!is_connected(g))
        keep = false;
      else if (count_cut_vertices(g) != opt.require_cut_count)
        keep = false;
    }
    if (keep && opt.triangle_free_only && has_triangle(g)) keep = false;
    if (!keep) {
      ++sum.filtered;
      continue;
    }
    ++sum.accepted;
    sink(g);
  }
  return sum;
}

}  // namespace wiener
