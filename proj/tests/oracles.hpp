#pragma once

// Independent brute-force oracles. Nothing here shares code with the
// search/enumeration paths it checks: plain odometers over product spaces.

#include <cstdint>
#include <random>
#include <vector>

#include <unionsep/graph.hpp>
#include <unionsep/separation.hpp>

namespace oracle {

using namespace unionsep;

/// Number of proper L-colorings by walking the whole product of the lists.
inline std::uint64_t count_colorings(const Graph &g, const ListAssignment &L) {
  const std::size_t n = g.order();
  std::vector<std::vector<Color>> choices(n);
  for (std::size_t v = 0; v < n; ++v)
    choices[v] = L[v].to_vector();
  const auto edges = g.edges();
  std::vector<std::size_t> idx(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (const auto &[u, v] : edges)
      if (choices[u][idx[u]] == choices[v][idx[v]]) {
        proper = false;
        break;
      }
    if (proper)
      ++count;
    std::size_t i = 0;
    while (i < n && ++idx[i] == choices[i].size())
      idx[i++] = 0;
    if (i == n)
      break;
  }
  return count;
}

inline bool colorable(const Graph &g, const ListAssignment &L) {
  return count_colorings(g, L) > 0;
}

/// Every subset of {0..universe-1} whose size lies in [lo, hi].
inline std::vector<ColorSet> subsets(Color universe, std::size_t lo,
                                     std::size_t hi) {
  std::vector<ColorSet> out;
  for (std::uint32_t mask = 0; mask < (1U << universe); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < lo || size > hi)
      continue;
    ColorSet s;
    for (Color c = 0; c < universe; ++c)
      if (mask >> c & 1U)
        s.insert(c);
    out.push_back(s);
  }
  return out;
}

/// (k,t)-choosability by trying every tuple of lists drawn from a fixed
/// universe. With universe >= n * max list size this is exact, since any
/// witness can be renamed into that many colors.
inline bool choosable(const Graph &g, const SeparationParams &p,
                      Color universe) {
  const std::size_t n = g.order();
  const std::size_t hi = p.regime() == Regime::Union ? p.t : p.k;
  const auto pool = subsets(universe, p.k, hi);
  std::vector<std::size_t> idx(n, 0);
  std::vector<ColorSet> lists(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v)
      lists[v] = pool[idx[v]];
    const ListAssignment L(lists, universe);
    if (is_valid_assignment(g, L, p) && !colorable(g, L))
      return false;
    std::size_t i = 0;
    while (i < n && ++idx[i] == pool.size())
      idx[i++] = 0;
    if (i == n)
      break;
  }
  return true;
}

/// Random lists of size 1..max_size over {0..universe-1}.
template <class Rng>
ListAssignment random_lists(std::size_t n, std::size_t max_size,
                            Color universe, Rng &rng) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<Color> color(0, universe - 1);
  std::vector<ColorSet> lists(n);
  for (auto &l : lists) {
    const auto s = std::min<std::size_t>(size(rng), universe);
    while (l.size() < s)
      l.insert(color(rng));
  }
  return ListAssignment(std::move(lists), universe);
}

/// Labeled graph on n vertices whose edge set is the bitmask `code` over the
/// pairs (u,v), u < v, in lexicographic order.
inline Graph graph_from_code(std::size_t n, std::uint32_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1U)
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Densest-subgraph value 2e(H)/n(H) by enumerating subsets directly from the
/// edge list (no bitmask adjacency, unlike mad_bruteforce).
inline Rational mad(const Graph &g) {
  const std::size_t n = g.order();
  const auto edges = g.edges();
  Rational best(0);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::int64_t e = 0;
    for (const auto &[u, v] : edges)
      if ((mask >> u & 1U) && (mask >> v & 1U))
        ++e;
    best = std::max(best, Rational(2 * e, std::popcount(mask)));
  }
  return best;
}

} // namespace oracle
