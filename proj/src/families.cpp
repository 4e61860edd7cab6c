#include "wiener/families.hpp"

#include <stdexcept>
#include <string>

namespace wiener {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParamError(msg);
}

}  // namespace

namespace detail {

std::int64_t exact_div(__int128 num, std::int64_t den) {
  if (num % den != 0)
    throw std::logic_error("formula evaluation left a nonzero remainder");
  __int128 q = num / den;
  return std::int64_t(q);
}

}  // namespace detail

Graph build_path(int n) {
  require(n >= 1 && n <= Graph::kMaxOrder, "path needs 1 <= n <= 64");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph build_cycle(int n) {
  require(n >= 3 && n <= Graph::kMaxOrder, "cycle needs 3 <= n <= 64");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph build_star(int n) {
  require(n >= 2 && n <= Graph::kMaxOrder, "star needs 2 <= n <= 64");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph::from_edges(n, e);
}

Graph build_lollipop(int n, int g) {
  require(n <= Graph::kMaxOrder, "lollipop needs n <= 64");
  require(g >= 3, "lollipop needs cycle length g >= 3");
  require(g <= n, "lollipop needs g <= n");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < g; ++i) e.emplace_back(i, (i + 1) % g);
  for (int i = g; i < n; ++i) e.emplace_back(i == g ? 0 : i - 1, i);
  return Graph::from_edges(n, e);
}

Graph build_dumbbell(int m1, int m2, int n) {
  require(n <= Graph::kMaxOrder, "dumbbell needs n <= 64");
  require(m1 >= 3 && m2 >= 3, "dumbbell needs cycle lengths >= 3");
  require(n >= m1 + m2 - 1,
          "dumbbell needs n >= m1 + m2 - 1 (cycles may share at most a vertex)");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m1; ++i) e.emplace_back(i, (i + 1) % m1);
  if (n == m1 + m2 - 1) {
    // second cycle through the shared vertex 0: 0, m1, m1+1, ..., m1+m2-2
    e.emplace_back(0, m1);
    for (int i = m1; i < m1 + m2 - 2; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(m1 + m2 - 2, 0);
  } else {
    for (int i = m1; i < m1 + m2; ++i)
      e.emplace_back(i, i + 1 == m1 + m2 ? m1 : i + 1);
    // path 0 - (m1+m2) - ... - (n-1) - m1
    int prev = 0;
    for (int i = m1 + m2; i < n; ++i) {
      e.emplace_back(prev, i);
      prev = i;
    }
    e.emplace_back(prev, m1);
  }
  return Graph::from_edges(n, e);
}

Graph build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kPath:
      return build_path(spec.n);
    case FamilyKind::kCycle:
      return build_cycle(spec.n);
    case FamilyKind::kStar:
      return build_star(spec.n);
    case FamilyKind::kLollipop:
      return build_lollipop(spec.n, spec.g);
    case FamilyKind::kDumbbell:
      return build_dumbbell(spec.m1, spec.m2, spec.n);
  }
  throw ParamError("unknown family kind");
}

std::int64_t formula_path_vertex_distance(int n, int i) {
  require(n >= 1, "path needs n >= 1");
  require(i >= 1 && i <= n, "vertex index is 1-based, needs 1 <= i <= n");
  __int128 a = __int128(i) * (i - 1) / 2;
  __int128 b = __int128(n - i) * (n - i + 1) / 2;
  return std::int64_t(a + b);
}

std::int64_t formula_wiener_path(int n) {
  require(n >= 1, "path needs n >= 1");
  return detail::exact_div(__int128(n + 1) * n * (n - 1), 6);
}

std::int64_t formula_cycle_vertex_distance(int n) {
  require(n >= 3, "cycle needs n >= 3");
  __int128 nn = __int128(n) * n;
  return detail::exact_div(n % 2 == 0 ? nn : nn - 1, 4);
}

std::int64_t formula_wiener_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  __int128 m = n;
  return detail::exact_div(n % 2 == 0 ? m * m * m : m * (m * m - 1), 8);
}

std::int64_t formula_wiener_lollipop(int n, int g) {
  require(g >= 3, "lollipop needs g >= 3");
  require(g <= n, "lollipop needs g <= n");
  __int128 N = n, G = g;
  __int128 core = 2 * (N * N + N * G + 3 * G - 1) - G * G;
  // common denominator 24 keeps everything integral until the final division
  __int128 total;
  if (g % 2 == 0)
    total = 3 * G * G * G + 2 * (N - G) * core;
  else
    total = 3 * G * (G * G - 1) + 2 * (N - G) * (core - 3);
  return detail::exact_div(total, 24);
}

std::int64_t formula_lollipop_pendant_distance(int n, int g) {
  require(g >= 3, "lollipop needs g >= 3");
  require(g < n, "pendant vertex exists only when g < n");
  __int128 G = g, N = n;
  __int128 cyc = g % 2 == 0 ? G * G / 4 : (G * G - 1) / 4;
  return detail::exact_div(2 * cyc + (N - G) * (N + G - 1), 2);
}

std::int64_t formula_wiener_dumbbell(int m1, int m2, int n) {
  require(m1 >= 3 && m2 >= 3, "dumbbell needs cycle lengths >= 3");
  require(n >= m1 + m2 - 1, "dumbbell needs n >= m1 + m2 - 1");
  __int128 a = m1, b = m2, k = n + 2 - m1 - m2;
  __int128 core = a * a * a + b * b * b + 2 * a * a * b + 2 * a * b * b +
                  2 * a * a * k + 2 * b * b * k + 4 * a * k * k + 4 * b * k * k +
                  8 * a * b * k - 4 * a * a - 4 * b * b - 8 * a * b - 12 * a * k -
                  12 * b * k - 8 * k * k;
  bool ea = m1 % 2 == 0, eb = m2 % 2 == 0;
  __int128 total;  // value scaled by 24
  if (ea && eb)
    total = 3 * (core + 8 * a + 8 * b - 8) + 4 * (k * k * k + 11 * k);
  else if (ea && !eb)
    total = 3 * (core + 6 * a + 7 * b - 4) + 2 * (2 * k * k * k + 19 * k);
  else if (!ea && eb)
    total = 3 * (core + 7 * a + 6 * b - 4) + 2 * (2 * k * k * k + 19 * k);
  else
    total = 3 * (core + 5 * a + 5 * b) + 4 * (k * k * k + 8 * k);
  return detail::exact_div(total, 24);
}

std::int64_t formula_wiener_lollipop_k(int n, int k) {
  require(k >= 1 && k <= 3, "specialised cubic covers k in {1, 2, 3}");
  require(n >= k + 3, "needs n >= k + 3 so the cycle has length >= 3");
  __int128 N = n;
  __int128 c = N * N * N - __int128(k) * N * N;
  bool even = n % 2 == 0;
  switch (k) {
    case 1:
      c += even ? 6 * N - 8 : 7 * N - 7;
      break;
    case 2:
      c += even ? 20 * N - 32 : 19 * N - 34;
      break;
    default:
      c += even ? 38 * N - 88 : 39 * N - 85;
      break;
  }
  return detail::exact_div(c, 8);
}

}  // namespace wiener
