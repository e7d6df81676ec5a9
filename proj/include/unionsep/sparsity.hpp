#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "max_flow.hpp"
#include "rational.hpp"

namespace unionsep {

/// Mad(G) with a vertex set whose induced subgraph attains it.
struct MadResult {
  Rational value;
  std::vector<Vertex> witness; // sorted
};

/// Number of edges of g with both ends in `subset` (sorted or not).
inline std::size_t induced_edge_count(const Graph &g,
                                      std::span<const Vertex> subset) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : subset)
    in[v] = true;
  std::size_t m = 0;
  for (const auto &[u, v] : g.edges())
    if (in[u] && in[v])
      ++m;
  return m;
}

namespace detail {

/// Vertex set maximizing e(S) - g|S| via a closure cut, where g = p/q. Empty
/// when no set beats zero, i.e. when no subgraph is denser than g (in edges
/// per vertex).
inline std::vector<Vertex> denser_than(const Graph &g, const Rational &guess) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t n = g.order();
  const std::size_t source = 0, sink = 1, first_edge = 2,
                    first_vertex = 2 + m;
  const auto p = guess.numerator();
  const auto q = guess.denominator();

  MaxFlow flow(2 + m + n);
  for (std::size_t e = 0; e < m; ++e) {
    flow.add_edge(source, first_edge + e, q);
    flow.add_edge(first_edge + e, first_vertex + edges[e].first,
                  MaxFlow::kInfinity);
    flow.add_edge(first_edge + e, first_vertex + edges[e].second,
                  MaxFlow::kInfinity);
  }
  for (std::size_t v = 0; v < n; ++v)
    flow.add_edge(first_vertex + v, sink, p);

  const auto cut = flow.run(source, sink);
  const auto profit = static_cast<std::int64_t>(m) * q - cut;
  std::vector<Vertex> out;
  if (profit <= 0)
    return out;
  const auto side = flow.source_side(source);
  for (std::size_t v = 0; v < n; ++v)
    if (side[first_vertex + v])
      out.push_back(static_cast<Vertex>(v));
  return out;
}

} // namespace detail

/// Exact Mad(G) by bisection on the edge density e(S)/|S| with a min-cut
/// oracle.
///
/// The lower end of the bracket is always the density of a concrete set and
/// the upper end is certified by a failed cut. Two distinct densities with
/// at most n vertices differ by at least 1/(n(n-1)), so once the bracket is
/// narrower than that the lower end is the optimum.
inline MadResult mad_exact(const Graph &g) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (n == 0)
    throw UsageError("Mad of the empty graph is undefined");
  if (g.size() == 0)
    return {Rational(0), {0}};

  std::vector<Vertex> best(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    best[v] = v;
  Rational lo(static_cast<std::int64_t>(g.size()), n);
  Rational hi(n - 1, 2);
  const Rational gap(1, n * (n - 1));

  while (hi - lo >= gap) {
    const Rational mid = (lo + hi) / 2;
    auto denser = detail::denser_than(g, mid);
    if (denser.empty()) {
      hi = mid;
    } else {
      lo = Rational(static_cast<std::int64_t>(induced_edge_count(g, denser)),
                    static_cast<std::int64_t>(denser.size()));
      best = std::move(denser);
    }
  }
  return {2 * lo, best};
}

/// Exact Mad(G) by trying every nonempty vertex subset; n <= 20. Ties go to
/// the subset with the smallest bitmask.
inline MadResult mad_bruteforce(const Graph &g) {
  const std::size_t n = g.order();
  if (n == 0)
    throw UsageError("Mad of the empty graph is undefined");
  if (n > 20)
    throw UsageError("mad_bruteforce is limited to 20 vertices");

  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (const auto &[u, v] : g.edges()) {
    nbr_mask[u] |= 1U << v;
    nbr_mask[v] |= 1U << u;
  }
  Rational best(-1);
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::int64_t twice_edges = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U)
        twice_edges += std::popcount(nbr_mask[v] & mask);
    const Rational density(twice_edges, std::popcount(mask));
    if (density > best) {
      best = density;
      best_mask = mask;
    }
  }
  MadResult out{best, {}};
  for (std::size_t v = 0; v < n; ++v)
    if (best_mask >> v & 1U)
      out.witness.push_back(static_cast<Vertex>(v));
  return out;
}

struct DegeneracyResult {
  /// Elimination order (original ids) if every step found a vertex of degree
  /// below the bound.
  std::optional<std::vector<Vertex>> order;
  /// Vertices left when peeling got stuck; empty on success.
  std::vector<Vertex> stuck_core;
  /// Vertices removed before getting stuck (equals *order on success).
  std::vector<Vertex> removed;
};

/// Repeatedly removes a minimum-degree vertex (lowest id on ties) while that
/// degree is below `bound`. Success certifies (bound-1)-degeneracy.
inline DegeneracyResult degeneracy_order(const Graph &g, std::size_t bound) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> gone(n, false);
  for (Vertex v = 0; v < n; ++v)
    deg[v] = g.degree(v);

  DegeneracyResult out;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (pick == n || deg[v] < deg[pick]))
        pick = v;
    if (deg[pick] >= bound) {
      for (Vertex v = 0; v < n; ++v)
        if (!gone[v])
          out.stuck_core.push_back(v);
      return out;
    }
    gone[pick] = true;
    out.removed.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!gone[w])
        --deg[w];
  }
  out.order = out.removed;
  return out;
}

/// One named step of the charge-redistribution argument.
struct ChargeCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ChargeReport {
  std::size_t k = 0;
  std::size_t t = 0;
  /// Threshold 2k - 2k^2/(t+1).
  Rational c_threshold;
  /// Roots of 2(t+1-d)d - (t+1)c in d; equal when t = 2k-1.
  Rational low_root, high_root;
  std::vector<ChargeCheck> checks;

  bool all_pass() const {
    for (const auto &c : checks)
      if (!c.pass)
        return false;
    return !checks.empty();
  }
};

/// Re-checks, in exact arithmetic, every numeric step of the argument that
/// Mad(G) < 2k(1 - k/(t+1)) forces (k,t)-choosability for t >= 2k-1.
///
/// Charges start at d(v); a vertex u of degree below c pulls (c - d(u))/d(u)
/// from each neighbor. Degrees are integers, so the range checks walk the
/// integer degrees; the root identity covers the real-valued statement.
inline ChargeReport verify_theorem4_charges(std::size_t k_in, std::size_t t_in) {
  if (k_in < 2)
    throw UsageError("charge audit needs k >= 2");
  if (t_in + 1 < 2 * k_in)
    throw UsageError("charge audit needs t >= 2k-1");

  const auto k = static_cast<std::int64_t>(k_in);
  const auto t1 = static_cast<std::int64_t>(t_in) + 1; // t + 1
  const Rational c = Rational(2 * k) - Rational(2 * k * k, t1);

  ChargeReport r;
  r.k = k_in;
  r.t = t_in;
  r.c_threshold = c;

  auto add = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  add("threshold-vs-k", c >= Rational(k),
      "c = " + to_string(c) + " vs k = " + std::to_string(k));

  // Receivers: integer degrees 1 <= d < c end with exactly c.
  {
    bool ok = true;
    std::int64_t count = 0;
    for (std::int64_t d = 1; Rational(d) < c; ++d, ++count) {
      const Rational pulled = Rational(d) * ((c - d) / d);
      ok = ok && (Rational(d) + pulled == c);
    }
    add("receiver-final-charge", ok,
        std::to_string(count) + " receiver degrees end at c");
  }

  // Any neighbor of a receiver u has degree >= t+1-d(u) > t+1-c >= c, so a
  // vertex never both pulls and gives.
  {
    bool ok = Rational(t1) - c >= c;
    for (std::int64_t du = 1; Rational(du) < c; ++du)
      ok = ok && Rational(t1 - du) > Rational(t1) - c;
    add("sender-separation", ok,
        "t+1-c = " + to_string(Rational(t1) - c) + " >= c");
  }

  // d >= t+1-k: each neighbor pulls at most (c-k)/k, leaving d*2k/(t+1).
  {
    bool ok = Rational(2 * k, t1) > Rational(0);
    const std::int64_t first = t1 - k;
    for (std::int64_t d = first; d <= first + t1; ++d) {
      const Rational left = Rational(d) - Rational(d) * ((c - k) / k);
      const Rational closed = Rational(d) * Rational(2 * k, t1);
      ok = ok && left == closed && closed >= c;
      if (d == first)
        ok = ok && closed == c;
    }
    add("high-degree-sender", ok,
        "final charge d*2k/(t+1) >= c for d >= " + std::to_string(first) +
            ", equality at d = " + std::to_string(first));
  }

  // ceil(c) <= d < t+1-k: each puller has degree >= d' = t+1-d.
  {
    bool ok = true;
    std::int64_t count = 0;
    for (std::int64_t d = ceil(c); d < t1 - k; ++d, ++count) {
      const std::int64_t dp = t1 - d;
      const Rational poly = Rational(2 * dp * d) - Rational(t1) * c;
      const Rational left = Rational(d) - Rational(d) * ((c - dp) / dp);
      const Rational closed = Rational(d) * (Rational(2 * dp) - c) / dp;
      ok = ok && poly >= Rational(0) && left == closed && closed >= c &&
           ((closed >= c) == (poly >= Rational(0)));
    }
    add("mid-degree-sender", ok,
        std::to_string(count) + " intermediate degrees checked");
  }

  // (t+1)(t+1-2c) = (t+1-2k)^2, so the roots (t+1 ± (t+1-2k))/2 are k and
  // t+1-k.
  {
    const Rational disc = Rational(t1) * (Rational(t1) - Rational(2) * c);
    const Rational square = Rational((t1 - 2 * k) * (t1 - 2 * k));
    const Rational root_abs(t1 - 2 * k); // nonnegative since t >= 2k-1
    r.low_root = (Rational(t1) - root_abs) / 2;
    r.high_root = (Rational(t1) + root_abs) / 2;
    auto poly = [&](const Rational &d) {
      return Rational(2) * (Rational(t1) - d) * d - Rational(t1) * c;
    };
    const bool ok = disc == square && r.low_root == Rational(k) &&
                    r.high_root == Rational(t1 - k) &&
                    poly(r.low_root) == Rational(0) && poly(r.high_root) == Rational(0);
    add("discriminant-identity", ok,
        "(t+1)(t+1-2c) = " + to_string(disc) + ", (t+1-2k)^2 = " +
            to_string(square) + ", roots {" + to_string(r.low_root) + ", " +
            to_string(r.high_root) + "}");
  }
  return r;
}

} // namespace unionsep
