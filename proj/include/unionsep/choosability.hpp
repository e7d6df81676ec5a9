#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "separation.hpp"
#include "solver.hpp"

namespace unionsep {

enum class Choosability { Choosable, NotChoosable, ResourceLimit };

inline const char *to_string(Choosability c) {
  switch (c) {
  case Choosability::Choosable:
    return "CHOOSABLE";
  case Choosability::NotChoosable:
    return "NOT_CHOOSABLE";
  case Choosability::ResourceLimit:
    return "RESOURCE_LIMIT";
  }
  return "?";
}

struct ChoosabilityLimits {
  /// Enumeration nodes plus solver nodes.
  std::uint64_t max_nodes = 10'000'000;
  /// Wall-clock budget; zero disables it.
  double max_seconds = 0.0;
};

struct ChoosabilityVerdict {
  Choosability verdict = Choosability::Choosable;
  std::optional<ListAssignment> witness; // present iff NotChoosable
  std::uint64_t assignments_tested = 0;
  std::uint64_t nodes = 0;
};

namespace detail {

/// Depth-first enumeration of (k,t)-list assignments, one representative per
/// color-permutation class.
///
/// Lists are chosen in vertex-id order. A list may use any color already
/// seen plus a block of fresh colors, numbered consecutively from the next
/// unused integer. Fresh colors born at the same vertex are interchangeable
/// until some later list separates them; among such a tied pair (c, c+1) a
/// later list may not contain c+1 without c. Together these make the
/// labeling canonical: every class is produced exactly once.
///
/// Union regime: list sizes run over k..t and assignments that are not
/// inclusion-minimal (some color can be dropped while keeping every list at
/// least k and every edge union at least t) are skipped. Dropping colors only
/// removes options from the colorer, and a list longer than t can always
/// lose a color, so a minimal uncolorable assignment exists whenever any
/// uncolorable one does.
///
/// Intersection regime: every list has exactly k colors, since trimming a
/// list never raises an intersection.
class AssignmentEnumerator {
public:
  AssignmentEnumerator(const Graph &g, const SeparationParams &p,
                       const ChoosabilityLimits &limits)
      : g_(g), p_(p), limits_(limits), lists_(g.order()),
        tied_(ColorSet::kCapacity + 1, 0), earlier_(g.order()),
        completes_at_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      Vertex last = v;
      for (Vertex w : g.neighbors(v)) {
        if (w < v)
          earlier_[v].push_back(w);
        last = std::max(last, w);
      }
      completes_at_[last].push_back(v);
    }
    min_size_ = p.k;
    max_size_ = p.regime() == Regime::Union ? p.t : p.k;
    start_ = std::chrono::steady_clock::now();
  }

  ChoosabilityVerdict run() {
    ChoosabilityVerdict out;
    if (g_.order() == 0)
      return out;
    dfs(0);
    out.assignments_tested = tested_;
    out.nodes = nodes_;
    if (witness_) {
      out.verdict = Choosability::NotChoosable;
      out.witness = ListAssignment(*witness_);
    } else if (aborted_) {
      out.verdict = Choosability::ResourceLimit;
    } else {
      out.verdict = Choosability::Choosable;
    }
    return out;
  }

private:
  bool done() const noexcept { return witness_.has_value() || aborted_; }

  bool charge(std::uint64_t amount) {
    nodes_ += amount;
    if (nodes_ > limits_.max_nodes) {
      aborted_ = true;
      return false;
    }
    if (limits_.max_seconds > 0.0 && (++clock_checks_ & 0x3ff) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > limits_.max_seconds) {
        aborted_ = true;
        return false;
      }
    }
    return true;
  }

  void dfs(Vertex i) {
    if (i == g_.order()) {
      leaf();
      return;
    }
    for (std::size_t size = min_size_; size <= max_size_ && !done(); ++size) {
      for (std::size_t fresh = 0; fresh <= size && !done(); ++fresh) {
        const std::size_t old = size - fresh;
        if (old > used_ || used_ + fresh > ColorSet::kCapacity)
          continue;
        ColorSet block;
        for (std::size_t x = 0; x < fresh; ++x)
          block.insert(static_cast<Color>(used_ + x));
        choose_old(i, block, fresh, 0, old);
      }
    }
  }

  // Picks `remaining` more old colors from [from, used_).
  void choose_old(Vertex i, ColorSet set, std::size_t fresh, Color from,
                  std::size_t remaining) {
    if (done())
      return;
    if (remaining == 0) {
      visit(i, set, fresh);
      return;
    }
    for (Color c = from; c + remaining <= used_ && !done(); ++c) {
      ColorSet next = set;
      next.insert(c);
      choose_old(i, next, fresh, c + 1, remaining - 1);
    }
  }

  void visit(Vertex i, const ColorSet &list, std::size_t fresh) {
    if (!charge(1))
      return;
    for (Vertex w : earlier_[i]) {
      if (p_.regime() == Regime::Union) {
        if (union_size(list, lists_[w]) < p_.t)
          return;
      } else if (intersection_size(list, lists_[w]) > p_.t) {
        return;
      }
    }
    for (Color c = 0; c + 1 < used_; ++c)
      if (tied_[c] && list.contains(c + 1) && !list.contains(c))
        return;

    const auto saved_tied = tied_;
    const auto saved_used = used_;
    for (Color c = 0; c + 1 < used_; ++c)
      if (tied_[c] && list.contains(c) != list.contains(c + 1))
        tied_[c] = 0;
    for (std::size_t x = 0; x < fresh; ++x)
      tied_[used_ + x] = x + 1 < fresh ? 1 : 0;
    used_ += static_cast<Color>(fresh);
    lists_[i] = list;

    if (p_.regime() != Regime::Union || minimal_so_far(i))
      dfs(i + 1);

    tied_ = saved_tied;
    used_ = saved_used;
  }

  // Every vertex whose closed neighborhood is now fully assigned must have
  // no droppable color.
  bool minimal_so_far(Vertex i) const {
    for (Vertex w : completes_at_[i]) {
      const auto &lw = lists_[w];
      if (lw.size() <= p_.k)
        continue;
      bool droppable = false;
      lw.for_each([&](Color c) {
        if (droppable)
          return;
        bool ok = true;
        for (Vertex u : g_.neighbors(w)) {
          const auto &lu = lists_[u];
          if (!lu.contains(c) && union_size(lw, lu) <= p_.t) {
            ok = false;
            break;
          }
        }
        droppable = ok;
      });
      if (droppable)
        return false;
    }
    return true;
  }

  void leaf() {
    ++tested_;
    const ListAssignment L(lists_, used_);
    SolveOptions opts;
    opts.max_nodes = limits_.max_nodes - std::min(limits_.max_nodes, nodes_);
    const auto r = solve(g_, L, opts);
    if (!charge(r.nodes_explored))
      return;
    if (r.verdict == SolveVerdict::NodeLimit) {
      aborted_ = true;
      return;
    }
    if (r.unsat())
      witness_ = lists_;
  }

  const Graph &g_;
  SeparationParams p_;
  ChoosabilityLimits limits_;
  std::vector<ColorSet> lists_;
  std::vector<std::uint8_t> tied_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<std::vector<Vertex>> completes_at_;
  std::size_t min_size_ = 0;
  std::size_t max_size_ = 0;
  Color used_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t tested_ = 0;
  std::uint64_t clock_checks_ = 0;
  bool aborted_ = false;
  std::optional<std::vector<ColorSet>> witness_;
  std::chrono::steady_clock::time_point start_;
};

} // namespace detail

/// Decides (k,t)-choosability of a small graph by exhaustive enumeration.
///
/// The first uncolorable assignment in enumeration order is returned as the
/// witness, so the result is deterministic. Running out of budget yields
/// ResourceLimit, never Choosable.
inline ChoosabilityVerdict
decide_choosable(const Graph &g, const SeparationParams &p,
                 const ChoosabilityLimits &limits = {}) {
  return detail::AssignmentEnumerator(g, p, limits).run();
}

/// True iff L is a (k,t)-list assignment of g admitting no L-coloring.
inline bool verify_not_choosable(const Graph &g, const ListAssignment &L,
                                 const SeparationParams &p) {
  if (!is_valid_assignment(g, L, p))
    return false;
  return solve(g, L).unsat();
}

} // namespace unionsep
