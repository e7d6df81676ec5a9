#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "separation.hpp"
#include "solver.hpp"

namespace unionsep {

struct ReducibleEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t common = 0;   // |N(u) ∩ N(v)|, uncapped
  std::size_t a_capped = 0; // min(common, 2)
  std::size_t degree_sum = 0;

  friend bool operator==(const ReducibleEdge &, const ReducibleEdge &) = default;
};

struct ReducibleEdgeReport {
  std::vector<ReducibleEdge> edges;
};

namespace detail {

inline void require_union_k3(const SeparationParams &p) {
  if (p.k < 3)
    throw UsageError("the degree-sum reduction needs k >= 3");
  if (p.regime() != Regime::Union)
    throw UsageError("the degree-sum reduction needs t >= k");
}

inline std::size_t capped_common(const Graph &g, Vertex u, Vertex v) {
  return std::min<std::size_t>(g.common_neighbor_count(u, v), 2);
}

} // namespace detail

/// Edges uv with d(u) + d(v) <= t + min(|N(u) ∩ N(v)|, 2), i.e. edges that
/// cannot survive in a minimal non-L-colorable graph.
inline ReducibleEdgeReport find_reducible_edges(const Graph &g,
                                                const SeparationParams &p) {
  detail::require_union_k3(p);
  ReducibleEdgeReport out;
  for (const auto &[u, v] : g.edges()) {
    const auto common = g.common_neighbor_count(u, v);
    const auto a = std::min<std::size_t>(common, 2);
    const auto sum = g.degree(u) + g.degree(v);
    if (sum <= p.t + a)
      out.edges.push_back({u, v, common, a, sum});
  }
  return out;
}

enum class Prop31Verdict { Pass, HypothesisNotMet, CriticalFault };

inline const char *to_string(Prop31Verdict v) {
  switch (v) {
  case Prop31Verdict::Pass:
    return "PASS";
  case Prop31Verdict::HypothesisNotMet:
    return "HYPOTHESIS_NOT_MET";
  case Prop31Verdict::CriticalFault:
    return "CRITICAL_FAULT";
  }
  return "?";
}

/// Tests the degree-sum reduction on one concrete instance.
///
/// The hypothesis is: d(u) + d(v) <= t + min(|N(u) ∩ N(v)|, 2) and G - u,
/// G - v, G - uv are each L-colorable. When it holds, G itself must be
/// L-colorable; CriticalFault means it was not.
inline Prop31Verdict check_prop31(const Graph &g, Vertex u, Vertex v,
                                  const ListAssignment &L,
                                  const SeparationParams &p) {
  detail::require_union_k3(p);
  if (!g.adjacent(u, v))
    throw UsageError("(" + std::to_string(u) + "," + std::to_string(v) +
                     ") is not an edge");
  if (const auto valid = is_valid_assignment(g, L, p); !valid)
    throw UsageError("list assignment is not valid: " +
                     valid.violation->describe());

  if (g.degree(u) + g.degree(v) > p.t + detail::capped_common(g, u, v))
    return Prop31Verdict::HypothesisNotMet;
  if (!solve(g.delete_vertex(u), L.without_vertex(u)).sat() ||
      !solve(g.delete_vertex(v), L.without_vertex(v)).sat() ||
      !solve(g.delete_edge(u, v), L).sat())
    return Prop31Verdict::HypothesisNotMet;
  return solve(g, L).sat() ? Prop31Verdict::Pass : Prop31Verdict::CriticalFault;
}

struct KernelResult {
  Graph kernel;
  /// kernel vertex i is original vertex kernel_vertices[i].
  std::vector<Vertex> kernel_vertices;
  /// Original ids in the order they were peeled.
  std::vector<Vertex> removal_order;
};

/// Peels vertices of degree < k (lowest id first) until none remain. Each
/// peeled vertex sees fewer than k colored neighbors when restored in
/// reverse order, so an empty kernel means every k-list assignment of g is
/// colorable greedily.
inline KernelResult greedy_kernel(const Graph &g, const SeparationParams &p) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> gone(n, false);
  for (Vertex v = 0; v < n; ++v)
    deg[v] = g.degree(v);

  KernelResult out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v] || deg[v] >= p.k)
        continue;
      gone[v] = true;
      out.removal_order.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!gone[w])
          --deg[w];
      changed = true;
      break;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v])
      out.kernel_vertices.push_back(v);
  out.kernel = g.induced(out.kernel_vertices);
  return out;
}

struct Prop31Instance {
  Graph graph;
  ListAssignment lists;
  SeparationParams params;
  Vertex u = 0;
  Vertex v = 0;
};

/// Draws a random graph on 2..max_n vertices, a random valid (k,t)-list
/// assignment (small lists, topped up edge by edge until every union reaches
/// t) and an edge meeting the degree-sum condition. Returns nullopt when the
/// drawn graph has no such edge.
template <class Rng>
std::optional<Prop31Instance>
random_prop31_instance(Rng &rng, std::size_t max_n, std::size_t k,
                       std::size_t t) {
  std::uniform_int_distribution<std::size_t> pick_n(2, max_n);
  std::uniform_real_distribution<double> pick_p(0.2, 0.9);
  const std::size_t n = pick_n(rng);
  const double density = pick_p(rng);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng))
        edges.emplace_back(a, b);
  Graph g(n, edges);

  const SeparationParams p(k, t);
  std::vector<Edge> candidates;
  for (const auto &[a, b] : g.edges())
    if (g.degree(a) + g.degree(b) <= t + detail::capped_common(g, a, b))
      candidates.emplace_back(a, b);
  if (candidates.empty())
    return std::nullopt;

  std::uniform_int_distribution<Color> pick_universe(
      static_cast<Color>(t), static_cast<Color>(t + 3));
  const Color universe = pick_universe(rng);
  std::uniform_int_distribution<Color> pick_color(0, universe - 1);
  std::geometric_distribution<std::size_t> extra(0.6);

  std::vector<ColorSet> lists(n);
  for (auto &list : lists) {
    const std::size_t size = std::min<std::size_t>(k + extra(rng), universe);
    while (list.size() < size)
      list.insert(pick_color(rng));
  }
  for (const auto &[a, b] : g.edges()) {
    std::bernoulli_distribution which(0.5);
    auto &grow = which(rng) ? lists[a] : lists[b];
    while (union_size(lists[a], lists[b]) < t)
      grow.insert(pick_color(rng));
  }

  std::uniform_int_distribution<std::size_t> pick_edge(0,
                                                       candidates.size() - 1);
  const auto [u, v] = candidates[pick_edge(rng)];
  return Prop31Instance{std::move(g), ListAssignment(std::move(lists), universe),
                        p, u, v};
}

struct Prop31SuiteReport {
  std::size_t hypothesis_met = 0;
  std::size_t passes = 0;
  std::size_t critical_faults = 0;
  std::size_t skipped = 0; // no candidate edge or hypothesis not met
  std::size_t attempts = 0;
};

/// Runs check_prop31 on random instances until `target` of them meet the
/// hypothesis (or `max_attempts` draws were made). Attempt i draws from its
/// own generator seeded with seed + i, and t cycles through [t_min, t_max].
inline Prop31SuiteReport run_prop31_suite(std::uint64_t seed,
                                          std::size_t target,
                                          std::size_t max_n = 7,
                                          std::size_t k = 3,
                                          std::size_t t_min = 5,
                                          std::size_t t_max = 8,
                                          std::size_t max_attempts = 200000) {
  if (t_min > t_max || t_min < k)
    throw UsageError("bad t range for the suite");
  Prop31SuiteReport report;
  for (std::size_t i = 0;
       report.hypothesis_met < target && i < max_attempts; ++i) {
    ++report.attempts;
    std::mt19937_64 rng(seed + i);
    const std::size_t t = t_min + i % (t_max - t_min + 1);
    const auto inst = random_prop31_instance(rng, max_n, k, t);
    if (!inst) {
      ++report.skipped;
      continue;
    }
    switch (check_prop31(inst->graph, inst->u, inst->v, inst->lists,
                         inst->params)) {
    case Prop31Verdict::Pass:
      ++report.hypothesis_met;
      ++report.passes;
      break;
    case Prop31Verdict::CriticalFault:
      ++report.hypothesis_met;
      ++report.critical_faults;
      break;
    case Prop31Verdict::HypothesisNotMet:
      ++report.skipped;
      break;
    }
  }
  return report;
}

} // namespace unionsep
