#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "berge/embedding.hpp"
#include "berge/errors.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/matching.hpp"
#include "berge/patterns.hpp"

namespace berge {

/// Certificate of a Berge copy: pattern vertex -> host vertex, and pattern edge
/// (in `PatternGraph::edges()` order) -> hyperedge index.
struct BergeWitness {
  std::vector<int> embedding;
  std::vector<int> assignment;

  bool operator==(const BergeWitness&) const = default;
};

/// Shadow graph plus, for every shadow pair, the ascending list of hyperedge indices
/// containing it. Supports LIFO push/pop of hyperedges for incremental search.
class BergeHost {
 public:
  static constexpr int max_vertices = 1024;

  static void require_capacity(int n) {
    if (n < 0) throw InputError("negative vertex count");
    if (n > max_vertices)
      throw CapacityError("Berge detection supports at most " + std::to_string(max_vertices) +
                          " vertices");
  }

  explicit BergeHost(int n) : n_(n) {
    require_capacity(n);
    containing_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    nbrs_.resize(static_cast<std::size_t>(n));
  }

  explicit BergeHost(const Hypergraph& h) : BergeHost(h.n()) {
    for (const auto& e : h.edges()) push(e);
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const Hyperedge& edge(std::size_t i) const { return edges_[i]; }

  bool has_edge(int a, int b) const noexcept { return a != b && !slot(a, b).empty(); }
  int degree(int v) const { return static_cast<int>(nbrs_[static_cast<std::size_t>(v)].size()); }
  std::span<const int> neighbors(int v) const { return nbrs_[static_cast<std::size_t>(v)]; }

  std::span<const int> containing(int a, int b) const {
    if (a == b) return {};
    return slot(a, b);
  }
  int multiplicity(int a, int b) const { return static_cast<int>(containing(a, b).size()); }

  void push(const Hyperedge& e) {
    const int idx = static_cast<int>(edges_.size());
    edges_.push_back(e);
    for_each_pair(e, [&](Edge p) {
      auto& s = slot(p.u, p.v);
      if (s.empty()) {
        link(p.u, p.v);
        link(p.v, p.u);
      }
      s.push_back(idx);
    });
  }

  void pop() {
    const Hyperedge e = std::move(edges_.back());
    edges_.pop_back();
    for_each_pair(e, [&](Edge p) {
      auto& s = slot(p.u, p.v);
      s.pop_back();
      if (s.empty()) {
        unlink(p.u, p.v);
        unlink(p.v, p.u);
      }
    });
  }

 private:
  std::vector<int>& slot(int a, int b) {
    if (a > b) std::swap(a, b);
    return containing_[static_cast<std::size_t>(a) * n_ + b];
  }
  const std::vector<int>& slot(int a, int b) const {
    if (a > b) std::swap(a, b);
    return containing_[static_cast<std::size_t>(a) * n_ + b];
  }
  void link(int a, int b) {
    auto& row = nbrs_[static_cast<std::size_t>(a)];
    row.insert(std::lower_bound(row.begin(), row.end(), b), b);
  }
  void unlink(int a, int b) {
    auto& row = nbrs_[static_cast<std::size_t>(a)];
    row.erase(std::lower_bound(row.begin(), row.end(), b));
  }

  int n_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<int>> containing_;
  std::vector<std::vector<int>> nbrs_;
};

namespace detail {

// Tries to give the embedded pattern edges distinct containing hyperedges.
class EdgeAssigner {
 public:
  EdgeAssigner(const PatternGraph& f, const BergeHost& host) : edges_(f.edges()), host_(host) {
    candidates_.resize(edges_.size());
  }

  std::optional<std::vector<int>> assign(std::span<const int> image) {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      candidates_[i] = host_.containing(image[edges_[i].u], image[edges_[i].v]);
    return matcher_.solve(candidates_);
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<Edge> edges_;
  const BergeHost& host_;
  std::vector<std::span<const int>> candidates_;
  SaturatingMatcher matcher_;
};

}  // namespace detail

/// First Berge copy of `f` in lexicographic order of the vertex embedding.
inline std::optional<BergeWitness> find_berge_copy(const BergeHost& host, const PatternGraph& f) {
  if (f.n() > host.n() || f.edge_count() > host.size()) return std::nullopt;
  detail::EdgeAssigner assigner(f, host);
  std::optional<BergeWitness> found;
  EmbeddingOptions opt;
  opt.less_than = f.symmetry_constraints();
  for_each_embedding(f.graph, host, opt, [&](std::span<const int> image) {
    if (auto a = assigner.assign(image)) {
      found = BergeWitness{{image.begin(), image.end()}, std::move(*a)};
      return true;
    }
    return false;
  });
  return found;
}

inline std::optional<BergeWitness> find_berge_copy(const Hypergraph& h, const PatternGraph& f) {
  BergeHost::require_capacity(h.n());
  if (f.n() > h.n() || f.edge_count() > h.size()) return std::nullopt;
  return find_berge_copy(BergeHost(h), f);
}

/// Searches only embeddings with some pattern edge inside hyperedge `edge_index`. When the
/// host minus that hyperedge is Berge-f-free this decides whether the full host is.
inline std::optional<BergeWitness> find_berge_copy_using(const BergeHost& host,
                                                         const PatternGraph& f,
                                                         std::size_t edge_index) {
  if (f.n() > host.n() || f.edge_count() > host.size()) return std::nullopt;
  detail::EdgeAssigner assigner(f, host);
  const auto constraints = f.symmetry_constraints();
  std::optional<BergeWitness> found;
  auto try_image = [&](std::span<const int> image) {
    if (auto a = assigner.assign(image)) {
      found = BergeWitness{{image.begin(), image.end()}, std::move(*a)};
      return true;
    }
    return false;
  };
  const Hyperedge& e = host.edge(edge_index);
  for (std::size_t i = 0; i < e.size() && !found; ++i)
    for (std::size_t j = i + 1; j < e.size() && !found; ++j)
      for_each_embedding_through(f.graph, host, Edge{e[i], e[j]}, constraints, try_image);
  return found;
}

/// Distinct hyperedges for the given shadow pairs, each containing its pair (Hall's
/// condition on the pair/hyperedge incidence graph). Absent iff no such choice exists.
inline std::optional<std::vector<int>> certify_core(const Hypergraph& h,
                                                    std::span<const Edge> core) {
  const BergeHost host(h);
  std::vector<std::span<const int>> candidates;
  for (const Edge& e : core) {
    if (e.u < 0 || e.v < 0 || e.u >= h.n() || e.v >= h.n() || e.u == e.v)
      throw InputError("core pair out of range");
    if (!host.has_edge(e.u, e.v))
      throw InputError("core pair (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") is not a shadow edge");
    candidates.push_back(host.containing(e.u, e.v));
  }
  return saturating_matching(candidates);
}

namespace detail {

inline bool triangle_is_core(const BergeHost& host, int a, int b, int c) {
  const std::span<const int> cand[3] = {host.containing(a, b), host.containing(a, c),
                                        host.containing(b, c)};
  return saturating_matching(cand).has_value();
}

}  // namespace detail

struct BookOfCores {
  Edge rootlet;
  std::vector<int> pages;
};

struct FanOfCores {
  int center = 0;
  std::vector<Edge> pages;
};

/// A book B_s in the shadow whose every page triangle is individually the core of a
/// Berge triangle. Pages of different triangles may share hyperedges.
inline std::optional<BookOfCores> find_book_of_cores(const Hypergraph& h, int s) {
  if (s < 1) throw ParameterError("book size must be at least 1");
  const BergeHost host(h);
  for (int u = 0; u < h.n(); ++u)
    for (int v : host.neighbors(u)) {
      if (v <= u) continue;
      if (host.degree(u) < s + 1 || host.degree(v) < s + 1) continue;
      std::vector<int> pages;
      for (int w : host.neighbors(u)) {
        if (w == v || !host.has_edge(v, w)) continue;
        if (detail::triangle_is_core(host, u, v, w)) pages.push_back(w);
        if (static_cast<int>(pages.size()) == s) return BookOfCores{{u, v}, pages};
      }
    }
  return std::nullopt;
}

/// A fan F_s in the shadow (shared center, vertex-disjoint page pairs) whose every page
/// triangle is individually the core of a Berge triangle.
inline std::optional<FanOfCores> find_fan_of_cores(const Hypergraph& h, int s) {
  if (s < 1) throw ParameterError("fan size must be at least 1");
  const BergeHost host(h);
  for (int c = 0; c < h.n(); ++c) {
    const auto nb = host.neighbors(c);
    if (static_cast<int>(nb.size()) < 2 * s) continue;
    // Certified page pairs form a graph on the neighbourhood; s disjoint pages is a
    // matching of size s there.
    Graph pages(static_cast<int>(nb.size()));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (host.has_edge(nb[i], nb[j]) && detail::triangle_is_core(host, c, nb[i], nb[j]))
          pages.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (static_cast<int>(pages.edge_count()) < s) continue;
    const auto matching = maximum_matching(pages);
    if (static_cast<int>(matching.size()) < s) continue;
    FanOfCores out{c, {}};
    for (int i = 0; i < s; ++i) out.pages.push_back({nb[matching[i].u], nb[matching[i].v]});
    return out;
  }
  return std::nullopt;
}

/// Direct check of the Berge-copy definition; malformed witnesses are rejected.
inline bool verify_witness(const Hypergraph& h, const PatternGraph& f, const BergeWitness& w) {
  if (static_cast<int>(w.embedding.size()) != f.n()) return false;
  const auto pe = f.edges();
  if (w.assignment.size() != pe.size()) return false;
  std::vector<int> seen_v = w.embedding;
  std::sort(seen_v.begin(), seen_v.end());
  if (std::adjacent_find(seen_v.begin(), seen_v.end()) != seen_v.end()) return false;
  for (int x : w.embedding)
    if (x < 0 || x >= h.n()) return false;
  std::vector<int> seen_e = w.assignment;
  std::sort(seen_e.begin(), seen_e.end());
  if (std::adjacent_find(seen_e.begin(), seen_e.end()) != seen_e.end()) return false;
  for (std::size_t i = 0; i < pe.size(); ++i) {
    const int idx = w.assignment[i];
    if (idx < 0 || static_cast<std::size_t>(idx) >= h.size()) return false;
    const auto& e = h.edge(static_cast<std::size_t>(idx));
    const int a = w.embedding[pe[i].u], b = w.embedding[pe[i].v];
    if (!std::binary_search(e.begin(), e.end(), a) || !std::binary_search(e.begin(), e.end(), b))
      return false;
  }
  return true;
}

}  // namespace berge
