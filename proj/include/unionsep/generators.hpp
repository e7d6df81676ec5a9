#pragma once

#include <random>
#include <vector>

#include "graph.hpp"

// Small named graphs used throughout the tests and the CLI.

namespace unionsep::generators {

inline Graph empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v)
    e.emplace_back(v - 1, v);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  if (n < 3)
    throw UsageError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v)
    e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, e);
}

/// Center 0, leaves 1..leaves.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v)
    e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v)
      e.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph(a + b, e);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, e);
}

/// Regular icosahedron: 12 vertices, 30 edges, 5-regular.
inline Graph icosahedron() {
  // Top 0, upper ring 1..5, lower ring 6..10, bottom 11.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
    const Vertex lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    e.emplace_back(0, up);
    e.emplace_back(up, up_next);
    e.emplace_back(up, lo);
    e.emplace_back(up_next, lo);
    e.emplace_back(lo, lo_next);
    e.emplace_back(lo, 11);
  }
  return Graph(12, e);
}

/// Erdős–Rényi G(n, p) drawn from `rng`.
template <class Rng> Graph random_graph(std::size_t n, double p, Rng &rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng))
        e.emplace_back(u, v);
  return Graph(n, e);
}

} // namespace unionsep::generators
