#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "berge/embedding.hpp"
#include "berge/errors.hpp"
#include "berge/graph.hpp"

namespace berge {

enum class PatternKind { book, fan, clique, complete_multipartite, turan, custom };

/// Small forbidden or counted graph together with how it was built.
///
/// Vertex layout per kind:
///  - book t: rootlet 0 and 1, pages 2..t+1;
///  - fan t: center 0, page pairs (1,2), (3,4), ...;
///  - clique r: 0..r-1;
///  - complete multipartite / Turan: parts laid out consecutively.
struct PatternGraph {
  PatternKind kind = PatternKind::custom;
  std::vector<int> params;
  Graph graph;
  std::vector<int> marked;  // rootlet pair for books, center for fans

  int n() const noexcept { return graph.n(); }
  std::size_t edge_count() const noexcept { return graph.edge_count(); }
  std::vector<Edge> edges() const { return graph.edges(); }

  /// Sizes of the colour classes for multipartite-like kinds.
  std::vector<int> part_sizes() const {
    if (kind == PatternKind::complete_multipartite) return params;
    if (kind == PatternKind::turan) {
      const int n = params[0], q = params[1];
      std::vector<int> sizes;
      for (int i = 0; i < q; ++i) sizes.push_back(n / q + (i >= q - n % q ? 1 : 0));
      return sizes;
    }
    return {};
  }

  /// Ordering constraints image[a] < image[b] valid for this kind: for every embedding
  /// there is an automorphic one (same image edge set) that satisfies them and is not
  /// lexicographically larger.
  std::vector<std::pair<int, int>> symmetry_constraints() const {
    std::vector<std::pair<int, int>> c;
    switch (kind) {
      case PatternKind::book: {
        const int t = params[0];
        c.emplace_back(0, 1);
        for (int i = 2; i + 1 < t + 2; ++i) c.emplace_back(i, i + 1);
        break;
      }
      case PatternKind::fan: {
        const int t = params[0];
        for (int i = 0; i < t; ++i) c.emplace_back(2 * i + 1, 2 * i + 2);
        for (int i = 0; i + 1 < t; ++i) c.emplace_back(2 * i + 1, 2 * i + 3);
        break;
      }
      case PatternKind::clique:
        for (int i = 0; i + 1 < n(); ++i) c.emplace_back(i, i + 1);
        break;
      case PatternKind::complete_multipartite:
      case PatternKind::turan: {
        int start = 0;
        for (int s : part_sizes()) {
          for (int i = start; i + 1 < start + s; ++i) c.emplace_back(i, i + 1);
          start += s;
        }
        break;
      }
      case PatternKind::custom:
        break;
    }
    return c;
  }

  std::string spec() const {
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    switch (kind) {
      case PatternKind::book: return "book:" + join(params);
      case PatternKind::fan: return "fan:" + join(params);
      case PatternKind::clique: return "clique:" + join(params);
      case PatternKind::complete_multipartite: return "kab:" + join(params);
      case PatternKind::turan: return "turan:" + join(params);
      case PatternKind::custom: return "custom";
    }
    return "custom";
  }
};

inline PatternGraph make_book(int t) {
  if (t < 1) throw ParameterError("book needs t >= 1");
  PatternGraph p{PatternKind::book, {t}, Graph(t + 2), {0, 1}};
  p.graph.add_edge(0, 1);
  for (int w = 2; w < t + 2; ++w) {
    p.graph.add_edge(0, w);
    p.graph.add_edge(1, w);
  }
  return p;
}

inline PatternGraph make_fan(int t) {
  if (t < 1) throw ParameterError("fan needs t >= 1");
  PatternGraph p{PatternKind::fan, {t}, Graph(2 * t + 1), {0}};
  for (int i = 0; i < t; ++i) {
    p.graph.add_edge(0, 2 * i + 1);
    p.graph.add_edge(0, 2 * i + 2);
    p.graph.add_edge(2 * i + 1, 2 * i + 2);
  }
  return p;
}

inline PatternGraph make_clique(int r) {
  if (r < 2) throw ParameterError("clique needs r >= 2");
  PatternGraph p{PatternKind::clique, {r}, Graph(r), {}};
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) p.graph.add_edge(a, b);
  return p;
}

namespace detail {

inline Graph multipartite_graph(const std::vector<int>& sizes) {
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  Graph g(n);
  std::vector<int> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) part.insert(part.end(), sizes[i], int(i));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part[a] != part[b]) g.add_edge(a, b);
  return g;
}

}  // namespace detail

inline PatternGraph make_complete_multipartite(std::vector<int> sizes) {
  if (sizes.empty()) throw ParameterError("complete multipartite needs at least one part");
  for (int s : sizes)
    if (s < 1) throw ParameterError("part sizes must be positive");
  return PatternGraph{PatternKind::complete_multipartite, sizes,
                      detail::multipartite_graph(sizes), {}};
}

/// T(n, q): complete q-partite, part sizes floor(n/q) or ceil(n/q).
inline PatternGraph make_turan(int n, int q) {
  if (n < 1 || q < 1 || q > n) throw ParameterError("turan needs 1 <= q <= n");
  PatternGraph p{PatternKind::turan, {n, q}, Graph(), {}};
  p.graph = detail::multipartite_graph(p.part_sizes());
  return p;
}

inline PatternGraph make_custom(Graph g) {
  return PatternGraph{PatternKind::custom, {}, std::move(g), {}};
}

/// Parses `clique:r`, `book:t`, `fan:t`, `kab:s1,s2,...` and `turan:n,q`.
inline PatternGraph parse_pattern(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InputError("pattern spec needs kind:params");
  const auto kind = spec.substr(0, colon);
  std::vector<int> nums;
  auto rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw InputError("bad number in pattern spec '" + std::string(spec) + "'");
    nums.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  auto need = [&](std::size_t count) {
    if (nums.size() != count)
      throw InputError("pattern '" + std::string(kind) + "' takes " + std::to_string(count) +
                       " parameter(s)");
  };
  if (kind == "clique") return need(1), make_clique(nums[0]);
  if (kind == "book") return need(1), make_book(nums[0]);
  if (kind == "fan") return need(1), make_fan(nums[0]);
  if (kind == "turan") return need(2), make_turan(nums[0], nums[1]);
  if (kind == "kab") {
    if (nums.empty()) throw InputError("kab needs part sizes");
    return make_complete_multipartite(nums);
  }
  throw InputError("unknown pattern kind '" + std::string(kind) + "'");
}

/// Number of injective edge-preserving maps pattern -> g.
template <AdjacencyHost Host>
std::uint64_t count_embeddings(const Graph& pattern, const Host& g) {
  std::uint64_t count = 0;
  EmbeddingOptions opt;
  opt.order = degree_order(pattern);
  for_each_embedding(pattern, g, opt, [&](std::span<const int>) {
    ++count;
    return false;
  });
  return count;
}

inline std::uint64_t automorphism_count(const Graph& pattern) {
  return count_embeddings(pattern, pattern);
}

/// N(H, G): number of subgraphs of g isomorphic to the pattern.
template <AdjacencyHost Host>
std::uint64_t count_copies(const PatternGraph& pattern, const Host& g) {
  if (pattern.n() > g.n()) return 0;
  return count_embeddings(pattern.graph, g) / automorphism_count(pattern.graph);
}

/// Lexicographically first embedding (image of pattern vertex 0, 1, ...), if any.
template <AdjacencyHost Host>
std::optional<std::vector<int>> contains_pattern(const PatternGraph& pattern, const Host& g) {
  std::optional<std::vector<int>> found;
  for_each_embedding(pattern.graph, g, EmbeddingOptions{}, [&](std::span<const int> img) {
    found.emplace(img.begin(), img.end());
    return true;
  });
  return found;
}

/// True iff g has a copy of the pattern using edge e.
template <AdjacencyHost Host>
bool contains_pattern_through(const PatternGraph& pattern, const Host& g, Edge e) {
  return for_each_embedding_through(pattern.graph, g, e, pattern.symmetry_constraints(),
                                    [](std::span<const int>) { return true; });
}

}  // namespace berge
