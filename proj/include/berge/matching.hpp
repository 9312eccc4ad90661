#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Augmenting-path bipartite matcher. Left side is small (pattern edges), right side
/// identifiers are arbitrary non-negative ints (hyperedge indices), so ownership is
/// tracked by a linear scan over the current assignment instead of a dense table.
class SaturatingMatcher {
 public:
  /// `candidates[i]` lists the right vertices adjacent to left vertex i, ascending.
  /// Returns the assignment left -> right if every left vertex can be matched.
  std::optional<std::vector<int>> solve(std::span<const std::span<const int>> candidates) {
    candidates_ = candidates;
    assignment_.assign(candidates.size(), -1);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      visited_.clear();
      if (!augment(i)) return std::nullopt;
    }
    return assignment_;
  }

 private:
  int owner(int right) const {
    for (std::size_t i = 0; i < assignment_.size(); ++i)
      if (assignment_[i] == right) return static_cast<int>(i);
    return -1;
  }

  bool augment(std::size_t left) {
    for (int right : candidates_[left]) {
      if (std::find(visited_.begin(), visited_.end(), right) != visited_.end()) continue;
      visited_.push_back(right);
      const int o = owner(right);
      if (o < 0 || augment(static_cast<std::size_t>(o))) {
        assignment_[left] = right;
        return true;
      }
    }
    return false;
  }

  std::span<const std::span<const int>> candidates_;
  std::vector<int> assignment_;
  std::vector<int> visited_;
};

inline std::optional<std::vector<int>> saturating_matching(
    std::span<const std::span<const int>> candidates) {
  return SaturatingMatcher{}.solve(candidates);
}

/// Maximum matching in a general graph (Edmonds' blossom algorithm, O(V^3)).
/// Returns the matched pairs with u < v, sorted.
inline std::vector<Edge> maximum_matching(const Graph& g) {
  const int n = g.n();
  std::vector<int> match(n, -1), parent(n, -1), base(n);
  std::vector<char> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          const int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (!blossom[base[i]]) continue;
            base[i] = cur;
            if (!used[i]) {
              used[i] = 1;
              q.push(i);
            }
          }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    int end = find_path(v);
    while (end >= 0) {
      const int pv = parent[end];
      const int next = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = next;
    }
  }
  std::vector<Edge> out;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) out.push_back({v, match[v]});
  return out;
}

}  // namespace berge
