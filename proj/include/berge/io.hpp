#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "berge/berge.hpp"
#include "berge/errors.hpp"
#include "berge/extremal.hpp"
#include "berge/hypergraph.hpp"
#include "berge/patterns.hpp"

namespace berge::io {

using nlohmann::json;

enum class Format { text, json };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + std::string(s) + "'");
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<long long> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError(lineno, "expected a non-negative integer");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

// Shared validation for both formats; `where` is a line number (text) or a 1-based
// hyperedge position (JSON).
inline void check_edge(const std::vector<long long>& v, long long n, std::size_t where,
                       const std::set<std::vector<long long>>& seen) {
  if (v.size() < 2) throw ParseError(where, "hyperedge needs at least 2 vertices");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= n)
      throw ParseError(where, "vertex " + std::to_string(v[i]) + " outside 0.." +
                                  std::to_string(n - 1));
    if (i > 0 && v[i] == v[i - 1]) throw ParseError(where, "repeated vertex " + std::to_string(v[i]));
    if (i > 0 && v[i] < v[i - 1]) throw ParseError(where, "vertices must be strictly ascending");
  }
  if (seen.count(v)) throw ParseError(where, "duplicate hyperedge");
}

inline Hypergraph parse_text(std::string_view text) {
  std::optional<long long> n;
  std::vector<Hyperedge> edges;
  std::set<std::vector<long long>> seen;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    auto line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto nums = parse_ints(line, lineno);
    if (!n) {
      if (nums.size() != 1 || nums[0] < 0 || nums[0] > 1'000'000)
        throw ParseError(lineno, "header must be a single vertex count");
      n = nums[0];
      continue;
    }
    check_edge(nums, *n, lineno, seen);
    seen.insert(nums);
    edges.emplace_back(nums.begin(), nums.end());
  }
  if (!n) throw ParseError(lineno, "missing vertex count header");
  return Hypergraph(static_cast<int>(*n), std::move(edges));
}

inline Hypergraph parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
      !doc["n"].is_number_integer() || !doc["edges"].is_array())
    throw ParseError(1, "JSON hypergraph needs integer 'n' and array 'edges'");
  const long long n = doc["n"].get<long long>();
  if (n < 0 || n > 1'000'000) throw ParseError(1, "vertex count out of range");
  std::vector<Hyperedge> edges;
  std::set<std::vector<long long>> seen;
  std::size_t where = 0;
  for (const auto& e : doc["edges"]) {
    ++where;
    if (!e.is_array()) throw ParseError(where, "hyperedge must be an array");
    std::vector<long long> v;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw ParseError(where, "vertex must be an integer");
      v.push_back(x.get<long long>());
    }
    check_edge(v, n, where, seen);
    seen.insert(v);
    edges.emplace_back(v.begin(), v.end());
  }
  return Hypergraph(static_cast<int>(n), std::move(edges));
}

}  // namespace detail

/// Text form: a vertex-count line, then one hyperedge per line as ascending indices.
/// Blank lines and `#` comments are ignored. Input starting with `{` is read as JSON
/// `{"n": N, "edges": [[...], ...]}`.
inline Hypergraph parse_hypergraph(std::string_view data) {
  const auto first = data.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && data[first] == '{') return detail::parse_json(data);
  return detail::parse_text(data);
}

inline json to_json(const Hypergraph& h) {
  json edges = json::array();
  const auto c = h.canonical();
  for (const auto& e : c.edges()) edges.push_back(e);
  return json{{"n", h.n()}, {"edges", edges}};
}

/// Canonical serialization: hyperedges in lexicographic order.
inline std::string serialize_hypergraph(const Hypergraph& h, Format format = Format::text) {
  if (format == Format::json) return to_json(h).dump() + "\n";
  std::string out = std::to_string(h.n()) + "\n";
  const auto c = h.canonical();
  for (const auto& e : c.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? " " : "") + std::to_string(e[i]);
    out += "\n";
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline json to_json(const Edge& e) { return json::array({e.u, e.v}); }

/// Embedding as [pattern vertex, host vertex] pairs; one assignment object per pattern
/// edge with its host pair, hyperedge index and the hyperedge itself.
inline json to_json(const BergeWitness& w, const PatternGraph& f, const Hypergraph& h) {
  json embedding = json::array();
  for (std::size_t i = 0; i < w.embedding.size(); ++i)
    embedding.push_back(json::array({static_cast<int>(i), w.embedding[i]}));
  json assignment = json::array();
  const auto pe = f.edges();
  for (std::size_t i = 0; i < pe.size(); ++i) {
    const int idx = w.assignment[i];
    assignment.push_back(json{
        {"pattern_edge", to_json(pe[i])},
        {"pair", json::array({w.embedding[pe[i].u], w.embedding[pe[i].v]})},
        {"hyperedge_index", idx},
        {"hyperedge", h.edge(static_cast<std::size_t>(idx))},
    });
  }
  return json{{"pattern", f.spec()}, {"embedding", embedding}, {"assignment", assignment}};
}

/// Inverse of the witness serialization (embedding and hyperedge indices only).
inline BergeWitness witness_from_json(const json& j) {
  BergeWitness w;
  try {
    for (const auto& pair : j.at("embedding")) {
      const auto pv = pair.at(0).get<std::size_t>();
      if (w.embedding.size() <= pv) w.embedding.resize(pv + 1, -1);
      w.embedding[pv] = pair.at(1).get<int>();
    }
    for (const auto& a : j.at("assignment")) w.assignment.push_back(a.at("hyperedge_index").get<int>());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed witness: ") + e.what());
  }
  return w;
}

inline json rational_json(const Rational& q) { return to_string(q); }

inline json to_json(const BoundReport& r) {
  return json{{"name", r.name},
              {"lhs", rational_json(r.lhs)},
              {"rhs", rational_json(r.rhs)},
              {"lhs_value", boost::rational_cast<double>(r.lhs)},
              {"rhs_value", boost::rational_cast<double>(r.rhs)},
              {"params", r.params},
              {"holds", r.holds}};
}

inline json to_json(const SearchResult& s) {
  return json{{"value", s.value},
              {"witness", to_json(s.witness)},
              {"explored", s.explored},
              {"exhausted", s.exhausted}};
}

inline json edge_set_json(const std::set<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

inline json to_json(const Graph& g) {
  json out = json::array();
  for (const Edge& e : g.edges()) out.push_back(to_json(e));
  return out;
}

}  // namespace berge::io
