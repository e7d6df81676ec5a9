#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "separation.hpp"

namespace unionsep {

enum class SolveVerdict { Sat, Unsat, NodeLimit };

inline const char *to_string(SolveVerdict v) {
  switch (v) {
  case SolveVerdict::Sat:
    return "SAT";
  case SolveVerdict::Unsat:
    return "UNSAT";
  case SolveVerdict::NodeLimit:
    return "NODE_LIMIT";
  }
  return "?";
}

struct SolveResult {
  SolveVerdict verdict = SolveVerdict::Unsat;
  std::optional<Coloring> witness; // present iff Sat
  std::uint64_t nodes_explored = 0;

  bool sat() const noexcept { return verdict == SolveVerdict::Sat; }
  bool unsat() const noexcept { return verdict == SolveVerdict::Unsat; }
};

struct SolveOptions {
  /// NodeLimit is reported once this many branching nodes were opened.
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

namespace detail {

/// Backtracking search for L-colorings.
///
/// Branches on the unassigned vertex with the fewest remaining candidates
/// (lowest id on ties), trying candidates in increasing color order. Each
/// assignment strikes the color from the neighbors' candidate sets; a
/// neighbor left with one candidate is assigned on the spot, one left with
/// none kills the branch.
class ColoringSearch {
public:
  static constexpr Color kNone = std::numeric_limits<Color>::max();

  ColoringSearch(const Graph &g, const ListAssignment &L,
                 const SolveOptions &opts)
      : g_(g), opts_(opts) {
    root_.domain = L.lists();
    root_.color.assign(g.order(), kNone);
  }

  /// Applies the precoloring and initial singleton propagation. Returns false
  /// if that alone is contradictory.
  bool seed(const PartialColoring &fixed) {
    for (Vertex v = 0; v < fixed.size(); ++v) {
      if (!fixed[v])
        continue;
      if (root_.color[v] != kNone) {
        // Already forced by an earlier precolored neighbor.
        if (root_.color[v] != *fixed[v])
          return false;
        continue;
      }
      if (!assign(root_, v, *fixed[v]))
        return false;
    }
    for (Vertex v = 0; v < g_.order(); ++v)
      if (root_.color[v] == kNone && root_.domain[v].size() == 1)
        if (!assign(root_, v, root_.domain[v].min()))
          return false;
    return true;
  }

  /// Visits complete colorings until `on_solution` returns false. Returns
  /// false if the node budget ran out.
  template <class OnSolution> bool run(OnSolution &&on_solution) {
    stop_ = false;
    limit_hit_ = false;
    descend(root_, on_solution);
    return !limit_hit_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  struct State {
    std::vector<ColorSet> domain;
    std::vector<Color> color;
  };

  bool assign(State &s, Vertex v, Color c) {
    if (!s.domain[v].contains(c))
      return false;
    std::vector<Vertex> queue{v};
    s.color[v] = c;
    s.domain[v] = ColorSet{c};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      const Color cx = s.color[x];
      for (Vertex w : g_.neighbors(x)) {
        if (s.color[w] != kNone) {
          if (s.color[w] == cx)
            return false;
          continue;
        }
        auto &dom = s.domain[w];
        if (!dom.contains(cx))
          continue;
        dom.erase(cx);
        if (dom.empty())
          return false;
        if (dom.size() == 1) {
          s.color[w] = dom.min();
          queue.push_back(w);
        }
      }
    }
    return true;
  }

  template <class OnSolution> void descend(const State &s, OnSolution &on) {
    Vertex pick = static_cast<Vertex>(g_.order());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (s.color[v] != kNone)
        continue;
      const auto sz = s.domain[v].size();
      if (sz < best) {
        best = sz;
        pick = v;
      }
    }
    if (pick == g_.order()) {
      if (!on(s.color))
        stop_ = true;
      return;
    }
    s.domain[pick].for_each([&](Color c) {
      if (stop_)
        return;
      if (nodes_ >= opts_.max_nodes) {
        limit_hit_ = stop_ = true;
        return;
      }
      ++nodes_;
      State child = s;
      if (assign(child, pick, c))
        descend(child, on);
    });
  }

  const Graph &g_;
  SolveOptions opts_;
  State root_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool limit_hit_ = false;
};

inline void check_inputs(const Graph &g, const ListAssignment &L) {
  if (L.size() != g.order())
    throw UsageError("list assignment covers " + std::to_string(L.size()) +
                     " vertices, graph has " + std::to_string(g.order()));
}

} // namespace detail

/// Extends `fixed` to an L-coloring of g, or proves none exists.
inline SolveResult solve_with_precolor(const Graph &g, const ListAssignment &L,
                                       const PartialColoring &fixed,
                                       const SolveOptions &opts = {}) {
  detail::check_inputs(g, L);
  if (fixed.size() != g.order())
    throw UsageError("precoloring size does not match the graph");
  for (Vertex v = 0; v < fixed.size(); ++v)
    if (fixed[v] && !L[v].contains(*fixed[v]))
      throw UsageError("precolor " + std::to_string(*fixed[v]) +
                       " of vertex " + std::to_string(v) + " is not in L(v)");

  SolveResult result;
  detail::ColoringSearch search(g, L, opts);
  if (!search.seed(fixed)) {
    result.verdict = SolveVerdict::Unsat;
    return result;
  }
  const bool complete = search.run([&](const std::vector<Color> &c) {
    result.witness = c;
    return false;
  });
  result.nodes_explored = search.nodes();
  if (result.witness)
    result.verdict = SolveVerdict::Sat;
  else
    result.verdict = complete ? SolveVerdict::Unsat : SolveVerdict::NodeLimit;
  return result;
}

/// Decides whether g has an L-coloring; a Sat result carries one.
inline SolveResult solve(const Graph &g, const ListAssignment &L,
                         const SolveOptions &opts = {}) {
  return solve_with_precolor(g, L, PartialColoring(g.order()), opts);
}

/// Number of distinct L-colorings, saturating at `cap`.
inline std::uint64_t count_colorings(const Graph &g, const ListAssignment &L,
                                     std::uint64_t cap) {
  detail::check_inputs(g, L);
  if (cap == 0)
    throw UsageError("cap must be positive");
  detail::ColoringSearch search(g, L, {});
  if (!search.seed(PartialColoring(g.order())))
    return 0;
  std::uint64_t count = 0;
  search.run([&](const std::vector<Color> &) { return ++count < cap; });
  return count;
}

} // namespace unionsep
