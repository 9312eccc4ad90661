#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "berge/errors.hpp"
#include "berge/graph.hpp"

namespace berge {

using Hyperedge = std::vector<int>;

/// Hypergraph on vertices 0..n-1. Hyperedges keep their insertion order; every
/// index-based result in this library refers to that order.
class Hypergraph {
 public:
  Hypergraph() = default;

  explicit Hypergraph(int n, std::optional<int> uniformity = std::nullopt)
      : n_(n), uniformity_(uniformity) {
    if (n < 0) throw InputError("negative vertex count");
    if (uniformity && *uniformity < 2) throw InputError("uniformity must be at least 2");
  }

  Hypergraph(int n, std::vector<Hyperedge> edges, std::optional<int> uniformity = std::nullopt)
      : Hypergraph(n, uniformity) {
    edges_.reserve(edges.size());
    for (auto& e : edges) add_edge(std::move(e));
  }

  /// Sorts the vertex list, then validates it against the invariants.
  void add_edge(Hyperedge e) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw InputError("hyperedge with fewer than 2 vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InputError("hyperedge repeats a vertex");
    if (e.front() < 0 || e.back() >= n_)
      throw InputError("hyperedge vertex out of range 0.." + std::to_string(n_ - 1));
    if (uniformity_ && static_cast<int>(e.size()) != *uniformity_)
      throw UniformityError("hyperedge of size " + std::to_string(e.size()) +
                            " in a " + std::to_string(*uniformity_) + "-uniform hypergraph");
    if (!index_.insert(e).second) throw InputError("duplicate hyperedge");
    edges_.push_back(std::move(e));
  }

  bool contains(const Hyperedge& e) const { return index_.count(e) != 0; }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<int> declared_uniformity() const noexcept { return uniformity_; }

  /// Declared uniformity, or the common hyperedge size when all sizes agree.
  std::optional<int> uniformity() const {
    if (uniformity_) return uniformity_;
    if (edges_.empty()) return std::nullopt;
    const auto r = edges_.front().size();
    for (const auto& e : edges_)
      if (e.size() != r) return std::nullopt;
    return static_cast<int>(r);
  }

  /// Same hypergraph with hyperedges in lexicographic order.
  Hypergraph canonical() const {
    Hypergraph out(n_, uniformity_);
    out.edges_.assign(index_.begin(), index_.end());
    out.index_ = index_;
    return out;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Hyperedge> edges_;
  std::set<Hyperedge> index_;
  std::optional<int> uniformity_;
};

template <class F>
void for_each_pair(const Hyperedge& e, F&& f) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) f(Edge{e[i], e[j]});
}

inline Graph shadow_graph(const Hypergraph& h) {
  Graph g(h.n());
  for (const auto& e : h.edges()) for_each_pair(e, [&](Edge p) { g.add_edge(p.u, p.v); });
  return g;
}

inline int pair_multiplicity(const Hypergraph& h, int u, int v) {
  if (u == v) throw InputError("pair_multiplicity needs two distinct vertices");
  if (u < 0 || v < 0 || u >= h.n() || v >= h.n()) throw InputError("vertex out of range");
  int count = 0;
  for (const auto& e : h.edges())
    if (std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v))
      ++count;
  return count;
}

inline std::map<Edge, int> pair_multiplicities(const Hypergraph& h) {
  std::map<Edge, int> mult;
  for (const auto& e : h.edges()) for_each_pair(e, [&](Edge p) { ++mult[p]; });
  return mult;
}

struct EdgeClassification {
  int threshold = 2;
  std::map<Edge, int> multiplicity;
  std::set<Edge> heavy;
  std::set<Edge> light;

  int multiplicity_of(Edge e) const {
    auto it = multiplicity.find(e);
    return it == multiplicity.end() ? 0 : it->second;
  }
};

/// p-heavy: contained in at least p hyperedges; p-light: shadow edge in fewer.
inline EdgeClassification classify_edges(const Hypergraph& h, int p) {
  if (p < 2) throw ParameterError("threshold p must be at least 2");
  EdgeClassification c;
  c.threshold = p;
  c.multiplicity = pair_multiplicities(h);
  for (const auto& [e, m] : c.multiplicity) (m >= p ? c.heavy : c.light).insert(e);
  return c;
}

enum class Part { h1, h2, h3 };

inline const char* to_string(Part p) {
  switch (p) {
    case Part::h1: return "H1";
    case Part::h2: return "H2";
    case Part::h3: return "H3";
  }
  return "?";
}

struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;

  auto operator<=>(const Triangle&) const = default;
};

struct HyperedgePartition {
  int threshold = 2;
  std::vector<Part> part_of;
  Graph g1;
  Graph g2;
  Graph g3;
  std::map<std::size_t, Triangle> chosen_triangle;

  std::size_t count(Part p) const {
    return static_cast<std::size_t>(std::count(part_of.begin(), part_of.end(), p));
  }
};

namespace detail {

inline int lookup(const std::map<Edge, int>& mult, int a, int b) {
  auto it = mult.find(Edge{a, b});
  return it == mult.end() ? 0 : it->second;
}

// Lexicographically first triple inside e with at least two heavy (multiplicity >= 2)
// edges and at least one p-light edge.
inline std::optional<Triangle> first_mixed_triangle(const Hyperedge& e,
                                                    const std::map<Edge, int>& mult, int p) {
  const std::size_t s = e.size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      for (std::size_t k = j + 1; k < s; ++k) {
        const int m[3] = {lookup(mult, e[i], e[j]), lookup(mult, e[i], e[k]),
                          lookup(mult, e[j], e[k])};
        const int heavy = (m[0] >= 2) + (m[1] >= 2) + (m[2] >= 2);
        const bool has_p_light = m[0] < p || m[1] < p || m[2] < p;
        if (heavy >= 2 && has_p_light) return Triangle{e[i], e[j], e[k]};
      }
  return std::nullopt;
}

}  // namespace detail

/// Splits hyperedges into H1 (holds a triangle with two or three heavy edges, one of
/// them p-light), H2 (every internal pair p-heavy) and H3 (the rest). G3 collects the
/// light (multiplicity 1) pairs of H3 hyperedges.
inline HyperedgePartition partition_hypergraph(const Hypergraph& h, int p) {
  if (p < 2) throw ParameterError("threshold p must be at least 2");
  const auto mult = pair_multiplicities(h);
  HyperedgePartition out;
  out.threshold = p;
  out.g1 = Graph(h.n());
  out.g2 = Graph(h.n());
  out.g3 = Graph(h.n());
  out.part_of.reserve(h.size());
  for (std::size_t idx = 0; idx < h.size(); ++idx) {
    const auto& e = h.edge(idx);
    if (auto tri = detail::first_mixed_triangle(e, mult, p)) {
      out.part_of.push_back(Part::h1);
      out.chosen_triangle.emplace(idx, *tri);
      out.g1.add_edge(tri->a, tri->b);
      out.g1.add_edge(tri->a, tri->c);
      out.g1.add_edge(tri->b, tri->c);
      continue;
    }
    bool all_p_heavy = true;
    for_each_pair(e, [&](Edge q) { all_p_heavy = all_p_heavy && mult.at(q) >= p; });
    if (all_p_heavy) {
      out.part_of.push_back(Part::h2);
      for_each_pair(e, [&](Edge q) { out.g2.add_edge(q.u, q.v); });
      continue;
    }
    out.part_of.push_back(Part::h3);
    for_each_pair(e, [&](Edge q) {
      if (mult.at(q) == 1) out.g3.add_edge(q.u, q.v);
    });
  }
  return out;
}

struct ShadowColoring {
  std::set<Edge> red;
  std::set<Edge> blue;
};

/// Red: the two lexicographically smallest light pairs of each H3 hyperedge.
/// Blue: every pair of each H1/H2 hyperedge. An edge picked both ways ends up blue.
inline ShadowColoring color_shadow(const Hypergraph& h, int p) {
  for (const auto& e : h.edges())
    if (e.size() != 3) throw UniformityError("shadow coloring needs a 3-uniform hypergraph");
  const auto part = partition_hypergraph(h, p);
  const auto mult = pair_multiplicities(h);
  ShadowColoring c;
  for (std::size_t idx = 0; idx < h.size(); ++idx) {
    const auto& e = h.edge(idx);
    if (part.part_of[idx] == Part::h3) {
      int picked = 0;
      for_each_pair(e, [&](Edge q) {
        if (picked < 2 && mult.at(q) == 1) {
          c.red.insert(q);
          ++picked;
        }
      });
    } else {
      for_each_pair(e, [&](Edge q) { c.blue.insert(q); });
    }
  }
  for (const Edge& e : c.blue) c.red.erase(e);
  return c;
}

}  // namespace berge
