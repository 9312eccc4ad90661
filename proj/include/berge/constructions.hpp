#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "berge/errors.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Lower-bound constructions for Berge book/fan/triangle-free hypergraphs.
//
// Constructions 1-3 (3-uniform) use four consecutive vertex sets A1, A2, A3, A4 of size
// floor(n/4); leftover vertices go to A4 (one), A3 and A4 (two) or A1, A2, A3 (three).
// The i-th vertices of A1 and A2 are twins (left part), likewise A3 and A4 (right part).
// Constructions 4-5 lay out left blocks first, then right blocks, then isolated vertices.

struct ConstructionSpec {
  int which = 1;
  int n = 0;
  int t = 0;
  int r = 3;
  int k = 0;
};

struct FourPartLayout {
  std::array<std::vector<int>, 4> parts;

  std::size_t left_twins() const { return std::min(parts[0].size(), parts[1].size()); }
  std::size_t right_twins() const { return std::min(parts[2].size(), parts[3].size()); }
  std::vector<int> right() const {
    std::vector<int> out = parts[2];
    out.insert(out.end(), parts[3].begin(), parts[3].end());
    return out;
  }
  std::vector<int> left() const {
    std::vector<int> out = parts[0];
    out.insert(out.end(), parts[1].begin(), parts[1].end());
    return out;
  }
};

inline FourPartLayout four_part_layout(int n) {
  const int q = n / 4;
  const int rem = n - 4 * q;
  std::array<int, 4> sizes = {q, q, q, q};
  if (rem == 1) sizes[3] += 1;
  if (rem == 2) sizes[2] += 1, sizes[3] += 1;
  if (rem == 3) sizes[0] += 1, sizes[1] += 1, sizes[2] += 1;
  FourPartLayout layout;
  int next = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < sizes[i]; ++j) layout.parts[i].push_back(next++);
  return layout;
}

/// Block layout of Construction 4: m blocks of size k, then m' blocks of size r-k.
struct BlockLayout {
  int m = 0;
  int m_prime = 0;
  int k = 0;
  int r = 0;

  std::vector<int> left_block(int i) const {
    std::vector<int> b;
    for (int j = 0; j < k; ++j) b.push_back(i * k + j);
    return b;
  }
  std::vector<int> right_block(int j) const {
    std::vector<int> b;
    for (int x = 0; x < r - k; ++x) b.push_back(m * k + j * (r - k) + x);
    return b;
  }
};

inline BlockLayout block_layout(int n, int r, int k) {
  BlockLayout b;
  b.k = k;
  b.r = r;
  b.m = ((n + 1) / 2) / k;
  b.m_prime = (n - k * b.m) / (r - k);
  return b;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace detail

inline void validate(const ConstructionSpec& s) {
  using detail::require;
  require(s.which >= 1 && s.which <= 5, "construction must be 1..5");
  if (s.which <= 3) {
    require(s.r == 3, "constructions 1-3 are 3-uniform");
    require(s.n >= 8, "constructions 1-3 need n >= 8");
    if (s.which >= 2) {
      require(s.t >= 2, "constructions 2-3 need t >= 2");
      require(s.t - 1 <= s.n / 4, "constructions 2-3 need t - 1 <= floor(n/4) twins per side");
    }
    return;
  }
  if (s.which == 4) {
    require(s.r >= 2, "construction 4 needs r >= 2");
    require(s.k >= 1 && s.k <= s.r - 1, "construction 4 needs 1 <= k <= r-1");
    require(s.n >= 2 * s.r, "construction 4 needs n >= 2r");
    const auto b = block_layout(s.n, s.r, s.k);
    require(b.m >= 1 && b.m_prime >= 1, "construction 4 has no blocks on one side");
    return;
  }
  require(s.r >= 3, "construction 5 needs r >= 3");
  require(s.t >= 2, "construction 5 needs t >= 2");
  require(s.t > s.r - 3, "construction 5 needs t > r - 3");
  const int k = s.r - 1;
  const int m = ((s.n + 1) / 2) / k;
  const int right_blocks = (s.n - m * k) / k;
  require(s.t - 1 <= m && s.t - 1 <= right_blocks,
          "construction 5 needs t - 1 blocks of size r-1 on each side");
}

inline Hypergraph construction1(int n) {
  validate({1, n});
  const auto L = four_part_layout(n);
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < L.left_twins(); ++i)
    for (int x : L.right()) edges.push_back({L.parts[0][i], L.parts[1][i], x});
  return Hypergraph(n, std::move(edges), 3).canonical();
}

namespace detail {

// Construction 2 body: the first t-1 left twins take every right vertex, the first t-1
// right twins take every left vertex outside the first t-1 left twins, and remaining
// left twins take the remaining right vertices.
inline std::vector<Hyperedge> construction2_edges(int n, int t) {
  const auto L = four_part_layout(n);
  const std::size_t d = static_cast<std::size_t>(t - 1);
  std::set<int> right_distinguished, left_distinguished;
  for (std::size_t j = 0; j < d; ++j) {
    right_distinguished.insert({L.parts[2][j], L.parts[3][j]});
    left_distinguished.insert({L.parts[0][j], L.parts[1][j]});
  }
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < L.left_twins(); ++i)
    for (int x : L.right())
      if (i < d || !right_distinguished.count(x))
        edges.push_back({L.parts[0][i], L.parts[1][i], x});
  for (std::size_t j = 0; j < d; ++j)
    for (int y : L.left())
      if (!left_distinguished.count(y)) edges.push_back({L.parts[2][j], L.parts[3][j], y});
  return edges;
}

}  // namespace detail

inline Hypergraph construction2(int n, int t) {
  validate({2, n, t});
  return Hypergraph(n, detail::construction2_edges(n, t), 3).canonical();
}

/// Construction 2 plus {a_1^i, a_3^j, a_4^j} for the first t-1 twins on each side.
inline Hypergraph construction3(int n, int t) {
  validate({3, n, t});
  auto edges = detail::construction2_edges(n, t);
  const auto L = four_part_layout(n);
  for (int i = 0; i < t - 1; ++i)
    for (int j = 0; j < t - 1; ++j)
      edges.push_back({L.parts[0][i], L.parts[2][j], L.parts[3][j]});
  return Hypergraph(n, std::move(edges), 3).canonical();
}

/// All B_i ∪ C_j for m blocks B of size k and m' blocks C of size r-k.
inline Hypergraph construction4(int n, int r, int k) {
  validate({4, n, 0, r, k});
  const auto b = block_layout(n, r, k);
  std::vector<Hyperedge> edges;
  for (int i = 0; i < b.m; ++i)
    for (int j = 0; j < b.m_prime; ++j) {
      Hyperedge e = b.left_block(i);
      const auto c = b.right_block(j);
      e.insert(e.end(), c.begin(), c.end());
      edges.push_back(std::move(e));
    }
  return Hypergraph(n, std::move(edges), r).canonical();
}

/// Construction 4 at k = r-1 with the right side also cut into (r-1)-blocks, rebuilt the
/// way Construction 3 is built from Construction 1: the first t-1 left blocks take every
/// right vertex, the first t-1 right blocks take the left vertices outside the first
/// t-1 left blocks, and each (left block i, right block j) pair among the first t-1 gets
/// the completing hyperedge {first vertex of left block i} ∪ right block j.
inline Hypergraph construction5(int n, int r, int t) {
  validate({5, n, t, r, r - 1});
  const int k = r - 1;
  const int d = t - 1;
  const int m = ((n + 1) / 2) / k;
  const int left_end = m * k;
  auto left_block = [&](int i) {
    Hyperedge b;
    for (int x = 0; x < k; ++x) b.push_back(i * k + x);
    return b;
  };
  auto right_block = [&](int j) {
    Hyperedge b;
    for (int x = 0; x < k; ++x) b.push_back(left_end + j * k + x);
    return b;
  };
  const int right_distinguished_end = left_end + d * k;
  const int left_distinguished_end = d * k;
  std::vector<Hyperedge> edges;
  for (int i = 0; i < m; ++i)
    for (int x = left_end; x < n; ++x)
      if (i < d || x >= right_distinguished_end) {
        Hyperedge e = left_block(i);
        e.push_back(x);
        edges.push_back(std::move(e));
      }
  for (int j = 0; j < d; ++j)
    for (int y = left_distinguished_end; y < left_end; ++y) {
      Hyperedge e = right_block(j);
      e.push_back(y);
      edges.push_back(std::move(e));
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Hyperedge e = right_block(j);
      e.push_back(i * k);
      edges.push_back(std::move(e));
    }
  return Hypergraph(n, std::move(edges), r).canonical();
}

inline Hypergraph build(const ConstructionSpec& s) {
  switch (s.which) {
    case 1: return construction1(s.n);
    case 2: return construction2(s.n, s.t);
    case 3: return construction3(s.n, s.t);
    case 4: return construction4(s.n, s.r, s.k);
    case 5: return construction5(s.n, s.r, s.t);
    default: throw ParameterError("construction must be 1..5");
  }
}

/// Closed-form hyperedge count of `build(s)`.
inline std::uint64_t expected_size(const ConstructionSpec& s) {
  validate(s);
  const std::uint64_t n = static_cast<std::uint64_t>(s.n);
  const std::uint64_t d = static_cast<std::uint64_t>(s.t > 0 ? s.t - 1 : 0);
  switch (s.which) {
    case 1:
    case 2: return n * n / 8;
    case 3: return n * n / 8 + d * d;
    case 4: {
      const auto b = block_layout(s.n, s.r, s.k);
      return static_cast<std::uint64_t>(b.m) * static_cast<std::uint64_t>(b.m_prime);
    }
    default: {
      const std::uint64_t k = static_cast<std::uint64_t>(s.r - 1);
      const std::uint64_t m = ((n + 1) / 2) / k;
      return m * (n - m * k) + d * d;
    }
  }
}

}  // namespace berge
