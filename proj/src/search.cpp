#include "wiener/search.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <map>
#include <mutex>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wiener {
namespace {

struct Score {
  int k;
  std::uint64_t wiener;
  std::uint64_t dmax;
};

Score score_rows(const std::uint64_t* rows, int n) {
  Score s;
  s.k = std::popcount(detail::articulation_mask(rows, n));
  std::uint64_t tot = 0, mx = 0;
  for (int v = 0; v < n; ++v) {
    std::int64_t d = detail::bfs_dist_sum(rows, n, v);
    assert(d >= 0);  // generated graphs are connected
    tot += static_cast<std::uint64_t>(d);
    mx = std::max(mx, static_cast<std::uint64_t>(d));
  }
  s.wiener = tot / 2;
  s.dmax = mx;
  return s;
}

void fold_max(std::uint64_t val, CertWord w, std::uint64_t* best,
              std::vector<CertWord>* wit) {
  if (wit->empty() || val > *best) {
    *best = val;
    wit->assign(1, w);
  } else if (val == *best) {
    wit->push_back(w);
  }
}

void fold_graph(std::vector<ClassExtremes>& by_k, CertWord w, const Score& s) {
  assert(s.k < static_cast<int>(by_k.size()));
  ClassExtremes& ce = by_k[static_cast<std::size_t>(s.k)];
  ++ce.count;
  fold_max(s.wiener, w, &ce.max_wiener, &ce.wiener_witnesses);
  fold_max(s.dmax, w, &ce.max_distance, &ce.distance_witnesses);
}

#ifdef _OPENMP
void merge_extremes(std::vector<ClassExtremes>& into,
                    std::vector<ClassExtremes>& from) {
  for (std::size_t k = 0; k < into.size(); ++k) {
    ClassExtremes& g = into[k];
    ClassExtremes& a = from[k];
    if (a.count == 0) continue;
    g.count += a.count;
    auto take = [](std::uint64_t aval, std::vector<CertWord>& awit,
                   std::uint64_t* gval, std::vector<CertWord>* gwit) {
      if (gwit->empty() || aval > *gval) {
        *gval = aval;
        *gwit = std::move(awit);
      } else if (aval == *gval) {
        gwit->insert(gwit->end(), awit.begin(), awit.end());
      }
    };
    take(a.max_wiener, a.wiener_witnesses, &g.max_wiener,
         &g.wiener_witnesses);
    take(a.max_distance, a.distance_witnesses, &g.max_distance,
         &g.distance_witnesses);
  }
}
#endif

void sort_witnesses(Sweep& s) {
  for (ClassExtremes& ce : s.by_k) {
    std::sort(ce.wiener_witnesses.begin(), ce.wiener_witnesses.end());
    std::sort(ce.distance_witnesses.begin(), ce.distance_witnesses.end());
  }
}

int max_cut_count(int n) { return n >= 2 ? n - 2 : 0; }

void check_class(int n, int k) {
  if (n < 1 || n > kMaxGenOrder)
    throw ParamError("exhaustive search supports orders 1.." +
                     std::to_string(kMaxGenOrder) + ", got " +
                     std::to_string(n));
  if (k < 0 || k > max_cut_count(n))
    throw ParamError("cut vertex count must be in 0.." +
                     std::to_string(max_cut_count(n)) + " for order " +
                     std::to_string(n));
}

ExtremalRecord record_from_sweep(const Sweep& s, int n, int k, Objective obj) {
  const ClassExtremes& ce = s.by_k[static_cast<std::size_t>(k)];
  assert(ce.count > 0);  // every class 0 <= k <= n-2 is inhabited
  ExtremalRecord r;
  r.n = n;
  r.k = k;
  r.objective = obj;
  r.class_size = ce.count;
  r.elapsed_ms = s.elapsed_ms;
  const std::vector<CertWord>& wit = obj == Objective::kWiener
                                         ? ce.wiener_witnesses
                                         : ce.distance_witnesses;
  r.optimum = obj == Objective::kWiener ? ce.max_wiener : ce.max_distance;
  r.witnesses.reserve(wit.size());
  for (CertWord w : wit) r.witnesses.push_back(certificate_from_certword(w, n));
  return r;
}

}  // namespace

Sweep sweep_classes_serial(int n) {
  check_class(n, 0);
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<CertWord>& certs = connected_certs(n, 1);
  Sweep s;
  s.n = n;
  s.by_k.resize(static_cast<std::size_t>(max_cut_count(n)) + 1);
  s.total = certs.size();
  std::uint64_t rows[kMaxGenOrder];
  for (CertWord w : certs) {
    detail::unpack_certword(w, n, rows);
    fold_graph(s.by_k, w, score_rows(rows, n));
  }
  sort_witnesses(s);
  s.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return s;
}

Sweep sweep_classes_parallel(int n, int workers) {
  check_class(n, 0);
  if (workers < 1) throw ParamError("workers must be >= 1");
#ifndef _OPENMP
  return sweep_classes_serial(n);
#else
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<CertWord>& certs = connected_certs(n, workers);
  Sweep s;
  s.n = n;
  s.by_k.resize(static_cast<std::size_t>(max_cut_count(n)) + 1);
  s.total = certs.size();
  std::int64_t count = static_cast<std::int64_t>(certs.size());
#pragma omp parallel num_threads(workers)
  {
    std::vector<ClassExtremes> local(s.by_k.size());
    std::uint64_t rows[kMaxGenOrder];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      CertWord w = certs[static_cast<std::size_t>(i)];
      detail::unpack_certword(w, n, rows);
      fold_graph(local, w, score_rows(rows, n));
    }
#pragma omp critical
    merge_extremes(s.by_k, local);
  }
  sort_witnesses(s);
  s.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return s;
#endif
}

const Sweep& class_sweep(int n, int workers) {
  check_class(n, 0);
  if (workers < 1) throw ParamError("workers must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, Sweep> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, workers);
  auto it = memo.find(key);
  if (it == memo.end()) {
    Sweep s = workers > 1 ? sweep_classes_parallel(n, workers)
                          : sweep_classes_serial(n);
    it = memo.emplace(key, std::move(s)).first;
  }
  return it->second;
}

ExtremalRecord search_max_wiener(int n, int k, int workers) {
  check_class(n, k);
  return record_from_sweep(class_sweep(n, workers), n, k, Objective::kWiener);
}

ExtremalRecord search_max_vertex_distance(int n, int k, int workers) {
  check_class(n, k);
  return record_from_sweep(class_sweep(n, workers), n, k,
                           Objective::kVertexDistance);
}

ExtremalRecord search_stream(Objective obj, std::istream& g6_lines, int n,
                             int k) {
  if (n < 1 || n > kMaxCertOrder)
    throw ParamError("stream search supports orders 1..32");
  if (k < 0 || k > max_cut_count(n))
    throw ParamError("cut vertex count must be in 0.." +
                     std::to_string(max_cut_count(n)) + " for order " +
                     std::to_string(n));
  auto t0 = std::chrono::steady_clock::now();
  ExtremalRecord r;
  r.n = n;
  r.k = k;
  r.objective = obj;
  IngestOptions opt;
  opt.strict = true;
  opt.connected_only = true;
  opt.require_order = n;
  opt.require_cut_count = k;
  std::uint64_t best = 0;
  bool any = false;
  std::vector<Certificate> wits;
  ingest_graph6(g6_lines, opt, [&](const Graph& g) {
    std::uint64_t val = 0;
    if (obj == Objective::kWiener) {
      val = static_cast<std::uint64_t>(wiener_index(g));
    } else {
      for (int v = 0; v < g.order(); ++v)
        val = std::max(val,
                       static_cast<std::uint64_t>(vertex_distance(g, v)));
    }
    if (!any || val > best) {
      any = true;
      best = val;
      wits.assign(1, canonical_certificate(g));
    } else if (val == best) {
      wits.push_back(canonical_certificate(g));
    }
    ++r.class_size;
  });
  if (!any)
    throw ParamError("the stream contained no graphs of the requested class");
  std::sort(wits.begin(), wits.end());
  wits.erase(std::unique(wits.begin(), wits.end()), wits.end());
  r.optimum = best;
  r.witnesses = std::move(wits);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

Graph surgery_pendant_block_to_cycle(const Graph& g, const Block& b) {
  BlockCutDecomposition bc = decompose(g);
  const Block* found = nullptr;
  for (const Block& cand : bc.blocks)
    if (cand.mask() == b.mask()) {
      found = &cand;
      break;
    }
  if (found == nullptr)
    throw ParamError("the given vertex set is not a block of the graph");
  if (!is_pendant(found->kind))
    throw ParamError("block replacement needs a pendant block");
  if (static_cast<int>(found->vertices.size()) < 4)
    throw ParamError("block replacement needs a block on >= 4 vertices");
  if (found->is_cycle()) return g;  // already a cycle: keep labels intact

  std::uint64_t rows[Graph::kMaxOrder];
  for (int v = 0; v < g.order(); ++v) rows[v] = g.rows()[v];
  std::uint64_t bmask = found->mask();
  for (int v : found->vertices) rows[v] &= ~(bmask & ~(1ull << v));
  const std::vector<int>& vs = found->vertices;  // ascending
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int u = vs[i];
    int v = vs[(i + 1) % vs.size()];
    rows[u] |= 1ull << v;
    rows[v] |= 1ull << u;
  }
  Graph out = Graph::from_rows(g.order(), rows);
  assert(is_connected(out));
  assert(count_cut_vertices(out) == count_cut_vertices(g));
  return out;
}

}  // namespace wiener
