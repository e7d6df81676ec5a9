#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace unionsep {

/// Dinic's algorithm on integer capacities.
class MaxFlow {
public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinity = std::numeric_limits<Capacity>::max() / 4;

  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), iter_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, Capacity cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  Capacity run(std::size_t source, std::size_t sink) {
    Capacity total = 0;
    while (bfs(source, sink)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (Capacity pushed = dfs(source, sink, kInfinity))
        total += pushed;
    }
    return total;
  }

  /// After run(): nodes reachable from the source in the residual graph,
  /// i.e. the source side of a minimum cut.
  std::vector<bool> source_side(std::size_t source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto id : adj_[x]) {
        const auto &a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

private:
  struct Arc {
    std::size_t to;
    Capacity cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      for (auto id : adj_[x]) {
        const auto &a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[x] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Capacity dfs(std::size_t x, std::size_t t, Capacity limit) {
    if (x == t)
      return limit;
    for (auto &i = iter_[x]; i < adj_[x].size(); ++i) {
      const auto id = adj_[x][i];
      auto &a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1)
        continue;
      if (Capacity got = dfs(a.to, t, std::min(limit, a.cap))) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

} // namespace unionsep
