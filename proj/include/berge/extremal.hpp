#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "berge/berge.hpp"
#include "berge/errors.hpp"
#include "berge/hypergraph.hpp"
#include "berge/patterns.hpp"

namespace berge {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

struct SearchResult {
  std::size_t value = 0;
  Hypergraph witness;
  std::uint64_t explored = 0;
  bool exhausted = false;
};

struct BoundReport {
  std::string name;
  Rational lhs;
  Rational rhs;
  std::map<std::string, std::string> params;
  bool holds = false;
};

inline BoundReport make_report(std::string name, Rational lhs, Rational rhs,
                               std::map<std::string, std::string> params = {}) {
  BoundReport r{std::move(name), lhs, rhs, std::move(params), false};
  r.holds = lhs <= rhs;
  return r;
}

inline constexpr std::uint64_t default_search_budget = 50'000'000;
inline constexpr int brute_force_max_n = 8;
inline constexpr std::size_t max_search_candidates = 4096;

namespace detail {

inline std::vector<Hyperedge> all_subsets(int n, int r) {
  std::vector<Hyperedge> out;
  Hyperedge cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (r - static_cast<int>(cur.size())); ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Include/exclude branch and bound over r-subsets in lexicographic order.
class BergeTuranSearch {
 public:
  BergeTuranSearch(int n, const PatternGraph& f, std::vector<Hyperedge> candidates,
                   std::uint64_t budget)
      : f_(f), candidates_(std::move(candidates)), host_(n), budget_(budget) {}

  void run() { visit(0); }

  std::size_t best() const { return best_.size(); }
  const std::vector<std::size_t>& best_set() const { return best_; }
  std::uint64_t explored() const { return explored_; }
  bool cut() const { return cut_; }

 private:
  void visit(std::size_t idx) {
    if (cut_) return;
    if (++explored_ > budget_) {
      cut_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (idx == candidates_.size()) return;
    if (chosen_.size() + (candidates_.size() - idx) <= best_.size()) return;

    host_.push(candidates_[idx]);
    // The host was Berge-F-free before this push, so a new copy must use it.
    const bool creates_copy = find_berge_copy_using(host_, f_, host_.size() - 1).has_value();
    if (!creates_copy) {
      chosen_.push_back(idx);
      visit(idx + 1);
      chosen_.pop_back();
    }
    host_.pop();
    visit(idx + 1);
  }

  const PatternGraph& f_;
  std::vector<Hyperedge> candidates_;
  BergeHost host_;
  std::uint64_t budget_;
  std::uint64_t explored_ = 0;
  bool cut_ = false;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.push_back({a, b});
  return out;
}

inline void require_brute_capacity(int n) {
  if (n < 0) throw ParameterError("negative vertex count");
  if (n > brute_force_max_n)
    throw CapacityError("exhaustive graph search supports n <= " +
                        std::to_string(brute_force_max_n));
}

inline void require_edges(const PatternGraph& f) {
  if (f.edge_count() == 0) throw ParameterError("forbidden pattern must have an edge");
}

}  // namespace detail

/// ex_r(n, Berge-F) by branch and bound. `exhausted` is false when the node budget ran
/// out, in which case `value` is only a lower bound.
inline SearchResult exact_berge_turan(int n, int r, const PatternGraph& f,
                                      std::uint64_t budget = default_search_budget) {
  if (r < 2) throw ParameterError("uniformity must be at least 2");
  if (n < r) throw ParameterError("need n >= r");
  detail::require_edges(f);
  if (detail::binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)) >
      max_search_candidates)
    throw CapacityError("too many candidate hyperedges for exact search");
  auto candidates = detail::all_subsets(n, r);
  detail::BergeTuranSearch search(n, f, candidates, budget);
  search.run();
  std::vector<Hyperedge> chosen;
  for (std::size_t idx : search.best_set()) chosen.push_back(candidates[idx]);
  return SearchResult{search.best(), Hypergraph(n, std::move(chosen), r), search.explored(),
                      !search.cut()};
}

/// Random greedy Berge-F-free r-uniform hypergraph: r-subsets are offered in a shuffled
/// order and kept when no Berge copy appears, until `max_edges` are kept.
inline Hypergraph random_berge_free(int n, int r, const PatternGraph& f, std::mt19937_64& rng,
                                    std::size_t max_edges) {
  auto candidates = detail::all_subsets(n, r);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  BergeHost host(n);
  std::vector<Hyperedge> kept;
  for (const auto& e : candidates) {
    if (kept.size() >= max_edges) break;
    host.push(e);
    if (find_berge_copy_using(host, f, host.size() - 1)) {
      host.pop();
      continue;
    }
    kept.push_back(e);
  }
  return Hypergraph(n, std::move(kept), r);
}

/// ex(n, F) by exhaustive include/exclude search over labelled graphs.
inline std::size_t brute_turan(int n, const PatternGraph& f) {
  detail::require_brute_capacity(n);
  detail::require_edges(f);
  const auto pairs = detail::all_pairs(n);
  if (f.n() > n) return pairs.size();
  Graph g(n);
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    best = std::max(best, g.edge_count());
    if (idx == pairs.size() || g.edge_count() + (pairs.size() - idx) <= best) return;
    g.add_edge(pairs[idx].u, pairs[idx].v);
    if (!contains_pattern_through(f, g, pairs[idx])) self(self, idx + 1);
    g.remove_edge(pairs[idx].u, pairs[idx].v);
    self(self, idx + 1);
  };
  rec(rec, 0);
  return best;
}

/// ex(n, H, F) = max N(H, G) over F-free n-vertex graphs G. N(H, .) is monotone, so
/// only maximal F-free graphs are scored.
inline std::uint64_t brute_gen_turan(int n, const PatternGraph& h, const PatternGraph& f) {
  detail::require_brute_capacity(n);
  detail::require_edges(f);
  if (h.n() > n) return 0;
  const auto pairs = detail::all_pairs(n);
  Graph g(n);
  if (f.n() > n) {
    for (const Edge& e : pairs) g.add_edge(e.u, e.v);
    return count_copies(h, g);
  }
  std::uint64_t best = 0;
  auto maximal = [&] {
    for (const Edge& e : pairs) {
      if (g.has_edge(e.u, e.v)) continue;
      g.add_edge(e.u, e.v);
      const bool blocked = contains_pattern_through(f, g, e);
      g.remove_edge(e.u, e.v);
      if (!blocked) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pairs.size()) {
      if (maximal()) best = std::max(best, count_copies(h, g));
      return;
    }
    g.add_edge(pairs[idx].u, pairs[idx].v);
    if (!contains_pattern_through(f, g, pairs[idx])) self(self, idx + 1);
    g.remove_edge(pairs[idx].u, pairs[idx].v);
    self(self, idx + 1);
  };
  rec(rec, 0);
  return best;
}

inline std::map<std::string, std::string> bound_params(int n, int r, const PatternGraph& f) {
  return {{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"F", f.spec()}};
}

/// ex(n,K_r,F) <= ex_r(n,Berge-F) <= ex(n,K_r,F) + ex(n,F), all three computed exactly.
inline std::pair<BoundReport, BoundReport> check_sandwich(
    int n, int r, const PatternGraph& f, std::uint64_t budget = default_search_budget) {
  detail::require_brute_capacity(n);
  const auto search = exact_berge_turan(n, r, f, budget);
  if (!search.exhausted)
    throw CapacityError("Berge-Turan search did not finish within the node budget");
  const auto gen = static_cast<std::int64_t>(brute_gen_turan(n, make_clique(r), f));
  const auto turan = static_cast<std::int64_t>(brute_turan(n, f));
  const auto value = static_cast<std::int64_t>(search.value);
  const auto params = bound_params(n, r, f);
  return {make_report("sandwich_lower", gen, value, params),
          make_report("sandwich_upper", value, gen + turan, params)};
}

/// |H| <= (|E(F)|-1) N(K3,G1) + N(K_r,G2) + |E(G3)| / k(r-k), k = min(r-1, |V(F)|-1),
/// with G1..G3 from the partition at p = |E(F)|.
inline BoundReport check_fre_bound(const Hypergraph& h, const PatternGraph& f) {
  const auto uniform = h.uniformity();
  if (!h.empty() && !uniform) throw UniformityError("bound needs an r-uniform hypergraph");
  std::map<std::string, std::string> params{{"n", std::to_string(h.n())}, {"F", f.spec()}};
  if (h.empty()) return make_report("fre_bound", 0, 0, params);
  const int r = *uniform;
  const int p = static_cast<int>(f.edge_count());
  if (p < 2) throw ParameterError("bound needs a pattern with at least two edges");
  const int k = std::min(r - 1, f.n() - 1);
  params["r"] = std::to_string(r);
  params["p"] = std::to_string(p);
  params["k"] = std::to_string(k);
  const auto part = partition_hypergraph(h, p);
  const auto triangles = static_cast<std::int64_t>(count_copies(make_clique(3), part.g1));
  const auto cliques = static_cast<std::int64_t>(count_copies(make_clique(r), part.g2));
  const Rational rhs = Rational(p - 1) * triangles + cliques +
                       Rational(static_cast<std::int64_t>(part.g3.edge_count()), k * (r - k));
  return make_report("fre_bound", static_cast<std::int64_t>(h.size()), rhs, params);
}

/// Finite part of (|E(F)|-1) ex(n,K3,F) + ex(n,K_r,F) + (|E(F)|-1) ex(n,F) / k(r-k).
/// The asymptotic error term is dropped, so this is not an upper bound at small n.
inline Rational bena_rhs(int n, int r, const PatternGraph& f) {
  if (r < 2) throw ParameterError("uniformity must be at least 2");
  const std::int64_t p = static_cast<std::int64_t>(f.edge_count());
  const int k = std::min(r - 1, f.n() - 1);
  if (k < 1) throw ParameterError("pattern needs at least two vertices");
  const auto tri = static_cast<std::int64_t>(brute_gen_turan(n, make_clique(3), f));
  const auto kr = static_cast<std::int64_t>(brute_gen_turan(n, make_clique(r), f));
  const auto ex = static_cast<std::int64_t>(brute_turan(n, f));
  return Rational(p - 1) * tri + kr + Rational((p - 1) * ex, k * (r - k));
}

/// w(s): C(s,2) - floor(s/q) C(q,2) - C(s - q floor(s/q), 2) with q = |V(F)|-1 when
/// s > |V(F)|, and s - 1 otherwise.
inline std::int64_t hyperedge_weight(int s, const PatternGraph& f) {
  auto c2 = [](std::int64_t x) { return x * (x - 1) / 2; };
  if (s <= f.n()) return s - 1;
  const std::int64_t q = f.n() - 1;
  if (q < 1) throw ParameterError("pattern needs at least two vertices");
  const std::int64_t blocks = s / q;
  return c2(s) - blocks * c2(q) - c2(s - q * blocks);
}

struct WeightedSums {
  std::int64_t size_minus_two = 0;
  std::int64_t size = 0;
  std::int64_t size_squared = 0;
  std::int64_t weight = 0;
  std::map<int, std::int64_t> weight_table;
};

inline WeightedSums weighted_sums(const Hypergraph& h, const PatternGraph& f) {
  WeightedSums out;
  for (const auto& e : h.edges()) {
    const auto s = static_cast<std::int64_t>(e.size());
    out.size_minus_two += s - 2;
    out.size += s;
    out.size_squared += s * s;
    auto [it, fresh] = out.weight_table.try_emplace(static_cast<int>(s), 0);
    if (fresh) it->second = hyperedge_weight(static_cast<int>(s), f);
    out.weight += it->second;
  }
  return out;
}

}  // namespace berge
