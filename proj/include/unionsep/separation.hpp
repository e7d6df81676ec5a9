#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "color_set.hpp"
#include "graph.hpp"

namespace unionsep {

enum class Regime { Intersection, Union };

inline const char *to_string(Regime r) {
  return r == Regime::Union ? "union" : "intersection";
}

/// The pair (k, t). t > k is union separation (|L(u) ∪ L(v)| >= t on edges),
/// t < k is intersection separation (|L(u) ∩ L(v)| <= t). At t == k both
/// conditions are vacuous for k-lists and the pair means plain k-choosability;
/// it is treated as the union regime so larger lists stay admissible.
struct SeparationParams {
  std::size_t k = 1;
  std::size_t t = 1;

  SeparationParams() = default;
  SeparationParams(std::size_t k_, std::size_t t_) : k(k_), t(t_) {
    if (k < 1)
      throw UsageError("k must be at least 1");
  }

  Regime regime() const noexcept {
    return t >= k ? Regime::Union : Regime::Intersection;
  }

  /// s = |t - k|.
  std::size_t separation() const noexcept { return t >= k ? t - k : k - t; }

  friend bool operator==(const SeparationParams &,
                         const SeparationParams &) = default;
};

/// One color list per vertex over the universe 0..universe-1.
class ListAssignment {
public:
  ListAssignment() = default;

  /// Universe defaults to 1 + the largest color used.
  explicit ListAssignment(std::vector<ColorSet> lists,
                          std::optional<Color> universe = std::nullopt)
      : lists_(std::move(lists)) {
    Color top = 0;
    for (std::size_t v = 0; v < lists_.size(); ++v) {
      if (lists_[v].empty())
        throw UsageError("list of vertex " + std::to_string(v) + " is empty");
      top = std::max<Color>(top, lists_[v].max() + 1);
    }
    universe_ = universe.value_or(top);
    if (universe_ < top)
      throw UsageError("color " + std::to_string(top - 1) +
                       " outside universe of size " +
                       std::to_string(universe_));
  }

  std::size_t size() const noexcept { return lists_.size(); }
  Color universe() const noexcept { return universe_; }

  const ColorSet &operator[](std::size_t v) const { return lists_.at(v); }
  const std::vector<ColorSet> &lists() const noexcept { return lists_; }

  /// Lists of the vertices in `keep`, in that order.
  ListAssignment restricted(std::span<const Vertex> keep) const {
    std::vector<ColorSet> out;
    out.reserve(keep.size());
    for (Vertex v : keep)
      out.push_back(lists_.at(v));
    return ListAssignment(std::move(out), universe_);
  }

  /// Lists after removing vertex v (ids above v shift down, matching
  /// Graph::delete_vertex).
  ListAssignment without_vertex(Vertex v) const {
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < lists_.size(); ++w)
      if (w != v)
        keep.push_back(w);
    return restricted(keep);
  }

  ListAssignment with_list(Vertex v, ColorSet list) const {
    auto copy = lists_;
    copy.at(v) = list;
    const Color top = list.empty() ? 0 : list.max() + 1;
    return ListAssignment(std::move(copy), std::max(universe_, top));
  }

  friend bool operator==(const ListAssignment &,
                         const ListAssignment &) = default;

private:
  std::vector<ColorSet> lists_;
  Color universe_ = 0;
};

/// c[v] is the color of v.
using Coloring = std::vector<Color>;

/// Precoloring: nullopt leaves the vertex free.
using PartialColoring = std::vector<std::optional<Color>>;

/// What went wrong first, in vertex order then edge order.
struct Violation {
  enum class Kind {
    ListTooSmall,
    UnionTooSmall,
    IntersectionTooLarge,
    ColorNotInList,
    MonochromaticEdge,
    SizeMismatch
  };
  Kind kind;
  Vertex u = 0;
  Vertex v = 0;
  std::size_t measured = 0;

  std::string describe() const {
    const auto su = std::to_string(u);
    const auto sv = std::to_string(v);
    switch (kind) {
    case Kind::ListTooSmall:
      return "vertex " + su + ": |L| = " + std::to_string(measured) +
             " below k";
    case Kind::UnionTooSmall:
      return "edge " + su + "-" + sv + ": union size " +
             std::to_string(measured) + " below t";
    case Kind::IntersectionTooLarge:
      return "edge " + su + "-" + sv + ": intersection size " +
             std::to_string(measured) + " above t";
    case Kind::ColorNotInList:
      return "vertex " + su + ": color " + std::to_string(measured) +
             " not in its list";
    case Kind::MonochromaticEdge:
      return "edge " + su + "-" + sv + ": both ends colored " +
             std::to_string(measured);
    case Kind::SizeMismatch:
      return "size mismatch: " + std::to_string(measured) +
             " entries for the graph's vertices";
    }
    return "unknown violation";
  }
};

struct CheckReport {
  bool ok = true;
  std::optional<Violation> violation;

  explicit operator bool() const noexcept { return ok; }

  static CheckReport pass() { return {}; }
  static CheckReport fail(Violation v) { return {false, v}; }
};

/// Is L a (k,t)-list assignment of g?
inline CheckReport is_valid_assignment(const Graph &g, const ListAssignment &L,
                                       const SeparationParams &p) {
  using K = Violation::Kind;
  if (L.size() != g.order())
    return CheckReport::fail({K::SizeMismatch, 0, 0, L.size()});
  for (Vertex v = 0; v < g.order(); ++v)
    if (L[v].size() < p.k)
      return CheckReport::fail({K::ListTooSmall, v, v, L[v].size()});
  for (const auto &[u, v] : g.edges()) {
    if (p.regime() == Regime::Union) {
      const auto n = union_size(L[u], L[v]);
      if (n < p.t)
        return CheckReport::fail({K::UnionTooSmall, u, v, n});
    } else {
      const auto n = intersection_size(L[u], L[v]);
      if (n > p.t)
        return CheckReport::fail({K::IntersectionTooLarge, u, v, n});
    }
  }
  return CheckReport::pass();
}

/// Is c an L-coloring of g?
inline CheckReport is_proper_coloring(const Graph &g, const ListAssignment &L,
                                      const Coloring &c) {
  using K = Violation::Kind;
  if (c.size() != g.order() || L.size() != g.order())
    return CheckReport::fail({K::SizeMismatch, 0, 0, c.size()});
  for (Vertex v = 0; v < g.order(); ++v)
    if (!L[v].contains(c[v]))
      return CheckReport::fail({K::ColorNotInList, v, v, c[v]});
  for (const auto &[u, v] : g.edges())
    if (c[u] == c[v])
      return CheckReport::fail({K::MonochromaticEdge, u, v, c[u]});
  return CheckReport::pass();
}

} // namespace unionsep
