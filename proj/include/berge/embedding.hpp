#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Anything the embedding search can map a pattern into: a Graph, or the shadow view
/// kept by the Berge detector.
template <class Host>
concept AdjacencyHost = requires(const Host& h, int v) {
  { h.n() } -> std::convertible_to<int>;
  { h.has_edge(v, v) } -> std::convertible_to<bool>;
  { h.degree(v) } -> std::convertible_to<int>;
  { h.neighbors(v) } -> std::convertible_to<std::span<const int>>;
};

struct EmbeddingOptions {
  /// Order in which pattern vertices are assigned; empty means 0..k-1. With the
  /// identity order images are produced in lexicographic order of the image tuple.
  std::vector<int> order;
  /// Pairs (a, b) requiring image[a] < image[b].
  std::vector<std::pair<int, int>> less_than;
  /// Pre-assigned (pattern vertex, host vertex) pairs.
  std::vector<std::pair<int, int>> seeds;
};

namespace detail {

template <AdjacencyHost Host>
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Host& host, const EmbeddingOptions& opt)
      : pattern_(pattern), host_(host), image_(static_cast<std::size_t>(pattern.n()), -1),
        used_(static_cast<std::size_t>(host.n()), 0) {
    const int k = pattern.n();
    std::vector<char> seeded(static_cast<std::size_t>(k), 0);
    valid_ = k <= host.n();
    for (auto [p, x] : opt.seeds) {
      if (p < 0 || p >= k || x < 0 || x >= host.n() || seeded[p] || used_[x]) {
        valid_ = false;
        continue;
      }
      seeded[p] = 1;
      image_[p] = x;
      used_[x] = 1;
    }
    std::vector<int> order = opt.order;
    if (order.empty()) {
      order.resize(static_cast<std::size_t>(k));
      std::iota(order.begin(), order.end(), 0);
    }
    std::vector<char> placed = seeded;
    // Seeded vertices must already be mutually consistent.
    for (auto [p, x] : opt.seeds) {
      if (!valid_) break;
      if (host.degree(x) < pattern.degree(p)) valid_ = false;
      for (int q : pattern.neighbors(p))
        if (seeded[q] && !host.has_edge(x, image_[q])) valid_ = false;
    }
    for (auto [a, b] : opt.less_than)
      if (seeded[a] && seeded[b] && image_[a] >= image_[b]) valid_ = false;

    for (int p : order) {
      if (seeded[p]) continue;
      Step s;
      s.vertex = p;
      for (int q : pattern.neighbors(p))
        if (placed[q]) s.mapped_neighbors.push_back(q);
      for (auto [a, b] : opt.less_than) {
        if (a == p && placed[b]) s.upper.push_back(b);
        if (b == p && placed[a]) s.lower.push_back(a);
      }
      placed[p] = 1;
      steps_.push_back(std::move(s));
    }
  }

  template <class Visitor>
  bool run(Visitor& visit) {
    if (!valid_) return false;
    return extend(0, visit);
  }

 private:
  struct Step {
    int vertex = 0;
    std::vector<int> mapped_neighbors;
    std::vector<int> lower;  // image[vertex] must exceed these images
    std::vector<int> upper;  // image[vertex] must stay below these images
  };

  bool admissible(const Step& s, int x) const {
    if (used_[x]) return false;
    if (host_.degree(x) < pattern_.degree(s.vertex)) return false;
    for (int q : s.lower)
      if (x <= image_[q]) return false;
    for (int q : s.upper)
      if (x >= image_[q]) return false;
    for (int q : s.mapped_neighbors)
      if (!host_.has_edge(x, image_[q])) return false;
    return true;
  }

  template <class Visitor>
  bool extend(std::size_t depth, Visitor& visit) {
    if (depth == steps_.size()) return visit(std::span<const int>(image_));
    const Step& s = steps_[depth];
    auto place = [&](int x) {
      if (!admissible(s, x)) return false;
      image_[s.vertex] = x;
      used_[x] = 1;
      const bool stop = extend(depth + 1, visit);
      used_[x] = 0;
      image_[s.vertex] = -1;
      return stop;
    };
    if (s.mapped_neighbors.empty()) {
      for (int x = 0; x < host_.n(); ++x)
        if (place(x)) return true;
      return false;
    }
    // Any mapped neighbour's adjacency list is a superset of the admissible images;
    // pick the shortest one. Lists are ascending so lexicographic order is kept.
    int anchor = image_[s.mapped_neighbors.front()];
    for (int q : s.mapped_neighbors)
      if (host_.degree(image_[q]) < host_.degree(anchor)) anchor = image_[q];
    for (int x : host_.neighbors(anchor))
      if (place(x)) return true;
    return false;
  }

  const Graph& pattern_;
  const Host& host_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<Step> steps_;
  bool valid_ = true;
};

}  // namespace detail

/// Enumerates injective maps of pattern vertices into host vertices that send every
/// pattern edge onto a host edge (not necessarily induced). `visit(image)` returns
/// true to stop; the function returns true iff some visit stopped the search.
template <AdjacencyHost Host, class Visitor>
bool for_each_embedding(const Graph& pattern, const Host& host, const EmbeddingOptions& opt,
                        Visitor&& visit) {
  detail::EmbeddingSearch<Host> search(pattern, host, opt);
  return search.run(visit);
}

/// Pattern vertices sorted by decreasing degree, ties by index.
inline std::vector<int> degree_order(const Graph& pattern) {
  std::vector<int> order(static_cast<std::size_t>(pattern.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  return order;
}

/// Calls `visit(image)` for embeddings whose image uses host edge {x, y} for at least
/// one pattern edge. Every such embedding is reported at least once (possibly more).
template <AdjacencyHost Host, class Visitor>
bool for_each_embedding_through(const Graph& pattern, const Host& host, Edge through,
                                const std::vector<std::pair<int, int>>& less_than,
                                Visitor&& visit) {
  for (const Edge& pe : pattern.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      EmbeddingOptions opt;
      opt.less_than = less_than;
      opt.seeds = flip ? std::vector<std::pair<int, int>>{{pe.u, through.v}, {pe.v, through.u}}
                       : std::vector<std::pair<int, int>>{{pe.u, through.u}, {pe.v, through.v}};
      if (for_each_embedding(pattern, host, opt, visit)) return true;
    }
  }
  return false;
}

}  // namespace berge
