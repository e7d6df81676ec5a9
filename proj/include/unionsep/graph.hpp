#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace unionsep {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on the dense vertex ids 0..n-1.
///
/// Neighbor lists are kept sorted, so adjacency tests are a binary search and
/// neighborhood intersections are a linear merge. Deletion operations return
/// a fresh graph; the original is never mutated.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Self-loops, parallel edges (in either
  /// orientation) and out-of-range endpoints raise UsageError.
  Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (const auto &[u, v] : edges) {
      if (u >= n || v >= n)
        throw UsageError("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") has an endpoint >= n=" +
                         std::to_string(n));
      if (u == v)
        throw UsageError("self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto &nbrs = adjacency_[v];
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
        throw UsageError("parallel edge at vertex " + std::to_string(v));
    }
    edge_count_ = edges.size();
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  /// |N(u) ∩ N(v)|.
  std::size_t common_neighbor_count(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw UsageError("common_neighbor_count needs two distinct vertices");
    const auto &a = adjacency_[u];
    const auto &b = adjacency_[v];
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j)
        ++i;
      else if (*j < *i)
        ++j;
      else {
        ++count;
        ++i;
        ++j;
      }
    }
    return count;
  }

  /// Edges with u < v, ordered lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  /// G - v. Vertices above v shift down by one: id w > v becomes w - 1.
  Graph delete_vertex(Vertex v) const {
    check_vertex(v);
    std::vector<Edge> kept;
    for (const auto &[a, b] : edges()) {
      if (a == v || b == v)
        continue;
      kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(order() - 1, kept);
  }

  /// G - uv. Vertex ids are unchanged.
  Graph delete_edge(Vertex u, Vertex v) const {
    if (!adjacent(u, v))
      throw UsageError("no edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    std::vector<Edge> kept;
    for (const auto &e : edges())
      if (!(e == Edge{std::min(u, v), std::max(u, v)}))
        kept.push_back(e);
    return Graph(order(), kept);
  }

  /// G + uv. Vertex ids are unchanged.
  Graph add_edge(Vertex u, Vertex v) const {
    auto all = edges();
    all.emplace_back(u, v);
    return Graph(order(), all);
  }

  /// Subgraph induced by `keep` (ids need not be sorted); vertex keep[i]
  /// becomes i.
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<std::int64_t> index(order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      check_vertex(keep[i]);
      index[keep[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> kept;
    for (const auto &[a, b] : edges())
      if (index[a] >= 0 && index[b] >= 0)
        kept.emplace_back(static_cast<Vertex>(index[a]),
                          static_cast<Vertex>(index[b]));
    return Graph(keep.size(), kept);
  }

  /// Relabels vertex v as perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != order())
      throw UsageError("permutation size does not match vertex count");
    std::vector<Edge> mapped;
    for (const auto &[a, b] : edges())
      mapped.emplace_back(perm[a], perm[b]);
    return Graph(order(), mapped);
  }

  /// 2m/n, exact.
  Rational average_degree() const {
    if (order() == 0)
      throw UsageError("average degree of the empty graph is undefined");
    return Rational(2 * static_cast<std::int64_t>(edge_count_),
                    static_cast<std::int64_t>(order()));
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  void check_vertex(Vertex v) const {
    if (v >= order())
      throw UsageError("vertex " + std::to_string(v) + " out of range (n=" +
                       std::to_string(order()) + ")");
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline std::size_t degree(const Graph &g, Vertex v) { return g.degree(v); }

inline std::size_t common_neighbor_count(const Graph &g, Vertex u, Vertex v) {
  return g.common_neighbor_count(u, v);
}

inline Graph delete_vertex(const Graph &g, Vertex v) {
  return g.delete_vertex(v);
}

inline Graph delete_edge(const Graph &g, Vertex u, Vertex v) {
  return g.delete_edge(u, v);
}

inline Rational average_degree(const Graph &g) { return g.average_degree(); }

} // namespace unionsep
