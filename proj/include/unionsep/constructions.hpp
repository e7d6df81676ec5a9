#pragma once

#include <array>
#include <string>
#include <vector>

#include "separation.hpp"

namespace unionsep {

/// A graph shipped together with the list assignment that defeats it.
struct ConstructedInstance {
  Graph graph;
  ListAssignment lists;
  SeparationParams params;
  std::vector<std::string> labels; // role of each vertex
  /// Separation the lists were actually built for. Differs from params.t
  /// only when build_book had to pad a small t.
  std::size_t construction_t = 0;
};

/// k independent centers u_1..u_k with pairwise disjoint lists of size
/// t-k+1, plus one vertex x_A per transversal A of those lists, adjacent to
/// every center and listing exactly A. Every center/gadget union has size t,
/// and a coloring of the centers always hits some x_A's whole list.
///
/// Centers are vertices 0..k-1; center i owns the colors
/// [i(t-k+1), (i+1)(t-k+1)). Gadget vertices follow in lexicographic order
/// of their transversals.
///
/// For t < 2k-1 the center lists would be shorter than k, so the instance is
/// built for t' = 2k-1 instead (unions of size t' >= t) and tagged (k,t).
inline ConstructedInstance build_book(std::size_t k, std::size_t t) {
  if (k < 2)
    throw UsageError("build_book needs k >= 2");
  if (t < k)
    throw UsageError("build_book needs t >= k");
  const std::size_t built_t = std::max(t, 2 * k - 1);
  const std::size_t width = built_t - k + 1;
  if (k * width > ColorSet::kCapacity)
    throw UsageError("too many colors for (k,t)");
  std::size_t gadgets = 1;
  for (std::size_t i = 0; i < k; ++i) {
    gadgets *= width;
    if (gadgets > 1'000'000)
      throw UsageError("book graph too large");
  }

  ConstructedInstance out;
  out.params = SeparationParams(k, t);
  out.construction_t = built_t;

  std::vector<ColorSet> lists;
  std::vector<Edge> edges;
  const std::string pad =
      built_t != t ? " (built for t'=" + std::to_string(built_t) + ")" : "";
  for (std::size_t i = 0; i < k; ++i) {
    ColorSet block;
    for (std::size_t j = 0; j < width; ++j)
      block.insert(static_cast<Color>(i * width + j));
    lists.push_back(block);
    out.labels.push_back("u" + std::to_string(i + 1) + pad);
  }

  // Odometer over transversals, first center most significant.
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t g = 0; g < gadgets; ++g) {
    const auto x = static_cast<Vertex>(k + g);
    ColorSet A;
    std::string name = "x{";
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = static_cast<Color>(i * width + digit[i]);
      A.insert(c);
      name += (i ? "," : "") + std::to_string(c);
      edges.emplace_back(static_cast<Vertex>(i), x);
    }
    lists.push_back(A);
    out.labels.push_back(name + "}");
    for (std::size_t i = k; i-- > 0;) {
      if (++digit[i] < width)
        break;
      digit[i] = 0;
    }
  }

  out.graph = Graph(k + gadgets, edges);
  out.lists = ListAssignment(std::move(lists));
  return out;
}

namespace detail {

// One copy of the planar gadget. Local ids:
//   0 = v_A (left, precolored a)        1 = v_B (right, precolored b)
//   2 = bottom {a,b,c4,c1}              3 = left  {a,c1,c2}
//   4 = top    {a,b,c2,c3}              5 = right {b,c3,c4}
//   6 = center {c1,c2,c3,c4}
// 2-3-4-5 is the 4-cycle around the center.
inline constexpr std::array<Edge, 14> kGadgetEdges{{
    {0, 2}, {0, 3}, {0, 4}, // v_A to bottom, left, top
    {1, 2}, {1, 4}, {1, 5}, // v_B to bottom, top, right
    {2, 3}, {3, 4}, {4, 5}, {2, 5}, // the 4-cycle
    {2, 6}, {3, 6}, {4, 6}, {5, 6}, // spokes to the center
}};

inline constexpr std::array<const char *, 5> kGadgetInteriorNames{
    "bottom", "left", "top", "right", "center"};

/// Interior lists (local ids 2..6) for precolors a, b and shared c1..c4.
inline std::array<ColorSet, 5> gadget_interior_lists(Color a, Color b,
                                                     std::array<Color, 4> c) {
  return {{
      {a, b, c[3], c[0]},
      {a, c[0], c[1]},
      {a, b, c[1], c[2]},
      {b, c[2], c[3]},
      {c[0], c[1], c[2], c[3]},
  }};
}

} // namespace detail

/// Planar graph with a (3,5)-list assignment and no coloring.
///
/// v_A (vertex 0) lists A = {0,1,2}, v_B (vertex 1) lists B = {3,4,5}; c1..c4
/// are the colors 6..9. For each (a,b) in A x B, in lexicographic order, one
/// gadget copy contributes five interior vertices. Whatever v_A and v_B
/// receive, the matching copy's 4-cycle is forced to use all of c1..c4,
/// leaving nothing for its center.
inline ConstructedInstance build_gadget35() {
  constexpr std::array<Color, 3> A{0, 1, 2};
  constexpr std::array<Color, 3> B{3, 4, 5};
  constexpr std::array<Color, 4> c{6, 7, 8, 9};

  ConstructedInstance out;
  out.params = SeparationParams(3, 5);
  out.construction_t = 5;
  std::vector<ColorSet> lists{ColorSet::from(A), ColorSet::from(B)};
  out.labels = {"v_A", "v_B"};
  std::vector<Edge> edges;

  Vertex next = 2;
  for (Color a : A) {
    for (Color b : B) {
      std::array<Vertex, 7> id{0, 1, next, next + 1, next + 2, next + 3,
                               next + 4};
      next += 5;
      const auto interior = detail::gadget_interior_lists(a, b, c);
      for (std::size_t j = 0; j < 5; ++j) {
        lists.push_back(interior[j]);
        out.labels.push_back(std::string(detail::kGadgetInteriorNames[j]) +
                             "[a=" + std::to_string(a) +
                             ",b=" + std::to_string(b) + "]");
      }
      for (const auto &[x, y] : detail::kGadgetEdges)
        edges.emplace_back(id[x], id[y]);
    }
  }
  out.graph = Graph(next, edges);
  out.lists = ListAssignment(std::move(lists));
  return out;
}

/// A single gadget copy, 7 vertices and 14 edges, with L(v_A) = {a} and
/// L(v_B) = {b} standing in for the precoloring. The singleton lists are not
/// a (3,5)-assignment by themselves; only the interior lists are.
inline ConstructedInstance build_gadget_single(Color a, Color b,
                                               std::array<Color, 4> c) {
  const std::array<Color, 6> all{a, b, c[0], c[1], c[2], c[3]};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j])
        throw UsageError("gadget colors must be distinct");

  ConstructedInstance out;
  out.params = SeparationParams(3, 5);
  out.construction_t = 5;
  std::vector<ColorSet> lists{{a}, {b}};
  out.labels = {"v_A", "v_B"};
  const auto interior = detail::gadget_interior_lists(a, b, c);
  for (std::size_t j = 0; j < 5; ++j) {
    lists.push_back(interior[j]);
    out.labels.emplace_back(detail::kGadgetInteriorNames[j]);
  }
  out.graph = Graph(7, std::span<const Edge>(detail::kGadgetEdges));
  out.lists = ListAssignment(std::move(lists));
  return out;
}

/// Planar edge bound m <= 3n - 6 (n >= 3). A necessary condition only.
inline bool satisfies_euler_bound(const Graph &g) {
  if (g.order() < 3)
    return true;
  return g.size() <= 3 * g.order() - 6;
}

} // namespace unionsep
