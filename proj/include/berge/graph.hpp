#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "berge/errors.hpp"

namespace berge {

/// Unordered vertex pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) {
  if (a == b) throw InputError("loop on vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InputError("negative vertex count");
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_edge(int a, int b) const noexcept {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  // Returns false when the edge was already present.
  bool add_edge(int a, int b) {
    check_pair(a, b);
    auto& ra = adj_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(ra.begin(), ra.end(), b);
    if (it != ra.end() && *it == b) return false;
    ra.insert(it, b);
    auto& rb = adj_[static_cast<std::size_t>(b)];
    rb.insert(std::lower_bound(rb.begin(), rb.end(), a), a);
    ++m_;
    return true;
  }

  bool remove_edge(int a, int b) {
    check_pair(a, b);
    auto& ra = adj_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(ra.begin(), ra.end(), b);
    if (it == ra.end() || *it != b) return false;
    ra.erase(it);
    auto& rb = adj_[static_cast<std::size_t>(b)];
    rb.erase(std::lower_bound(rb.begin(), rb.end(), a));
    --m_;
    return true;
  }

  int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  std::span<const int> neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int a = 0; a < n_; ++a)
      for (int b : adj_[static_cast<std::size_t>(a)])
        if (a < b) out.push_back({a, b});
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
      throw InputError("vertex out of range in pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    if (a == b) throw InputError("loop on vertex " + std::to_string(a));
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
};

}  // namespace berge
