#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "separation.hpp"

// Plain-text formats.
//
// Graph:  first line "n m", then m lines "u v" (0-based ids).
// Lists:  one line per vertex, "v: c1 c2 c3 ...".
// In both, blank lines and lines starting with '#' are ignored.

namespace unionsep::io {

namespace detail {

inline bool skippable(const std::string &line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

/// Reads whitespace-separated nonnegative integers; anything else is an
/// error.
inline std::vector<std::uint64_t> integers(const std::string &text,
                                           std::size_t lineno) {
  std::istringstream in(text);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(lineno, "expected a nonnegative integer, got '" + tok +
                                   "'");
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::out_of_range &) {
      throw ParseError(lineno, "integer out of range: " + tok);
    }
  }
  return out;
}

} // namespace detail

inline Graph read_graph(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line))
      continue;
    const auto nums = detail::integers(line, lineno);
    if (nums.size() != 2)
      throw ParseError(lineno, header ? "expected 'u v'" : "expected 'n m'");
    if (!header) {
      header.emplace(nums[0], nums[1]);
      continue;
    }
    const auto n = header->first;
    if (nums[0] >= n || nums[1] >= n)
      throw ParseError(lineno, "vertex id out of range (n=" +
                                   std::to_string(n) + ")");
    const auto u = static_cast<Vertex>(nums[0]);
    const auto v = static_cast<Vertex>(nums[1]);
    if (u == v)
      throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " +
                                   std::to_string(v));
    edges.emplace_back(u, v);
  }
  if (!header)
    throw ParseError(lineno, "missing 'n m' header");
  if (edges.size() != header->second)
    throw ParseError(lineno, "header declares " +
                                 std::to_string(header->second) +
                                 " edges, found " +
                                 std::to_string(edges.size()));
  return Graph(header->first, edges);
}

/// `vertices` is the expected vertex count; every vertex must appear exactly
/// once. The universe is 1 + the largest color unless overridden.
inline ListAssignment read_lists(std::istream &in, std::size_t vertices,
                                 std::optional<Color> universe = std::nullopt) {
  std::vector<std::optional<ColorSet>> lists(vertices);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line))
      continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(lineno, "expected 'v: c1 c2 ...'");
    const auto head = detail::integers(line.substr(0, colon), lineno);
    if (head.size() != 1)
      throw ParseError(lineno, "expected a single vertex id before ':'");
    if (head[0] >= vertices)
      throw ParseError(lineno, "vertex id " + std::to_string(head[0]) +
                                   " out of range (n=" +
                                   std::to_string(vertices) + ")");
    auto &slot = lists[head[0]];
    if (slot)
      throw ParseError(lineno, "vertex " + std::to_string(head[0]) +
                                   " listed twice");
    const auto colors = detail::integers(line.substr(colon + 1), lineno);
    if (colors.empty())
      throw ParseError(lineno, "empty list");
    ColorSet set;
    for (auto c : colors) {
      if (c >= ColorSet::kCapacity)
        throw ParseError(lineno, "color " + std::to_string(c) +
                                     " exceeds capacity");
      if (universe && c >= *universe)
        throw ParseError(lineno, "color " + std::to_string(c) +
                                     " outside universe " +
                                     std::to_string(*universe));
      if (set.contains(static_cast<Color>(c)))
        throw ParseError(lineno, "repeated color " + std::to_string(c));
      set.insert(static_cast<Color>(c));
    }
    slot = set;
  }
  std::vector<ColorSet> out;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (!lists[v])
      throw ParseError(lineno, "no list for vertex " + std::to_string(v));
    out.push_back(*lists[v]);
  }
  return ListAssignment(std::move(out), universe);
}

inline void write_graph(std::ostream &out, const Graph &g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto &[u, v] : g.edges())
    out << u << ' ' << v << '\n';
}

inline void write_lists(std::ostream &out, const ListAssignment &L) {
  for (std::size_t v = 0; v < L.size(); ++v) {
    out << v << ':';
    L[v].for_each([&](Color c) { out << ' ' << c; });
    out << '\n';
  }
}

inline void write_coloring(std::ostream &out, const Coloring &c) {
  for (std::size_t v = 0; v < c.size(); ++v)
    out << v << ": " << c[v] << '\n';
}

inline Graph parse_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open graph file " + path);
  return read_graph(in);
}

inline ListAssignment
parse_lists_file(const std::string &path, std::size_t vertices,
                 std::optional<Color> universe = std::nullopt) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open list file " + path);
  return read_lists(in, vertices, universe);
}

} // namespace unionsep::io
