#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "berge/berge.hpp"
#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/extremal.hpp"
#include "berge/hypergraph.hpp"
#include "berge/io.hpp"
#include "berge/patterns.hpp"

// Command-line front end.
//
// Exit codes: 0 success / FREE / every bound holds; 1 BERGE_COPY found or some bound
// fails; 2 usage or input error; 3 capacity exceeded.
namespace berge::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_found = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_capacity = 3;

struct SuiteOptions {
  std::optional<int> n;
  int r = 3;
  std::optional<std::string> pattern;
  int samples = 1000;
  std::uint64_t seed = 1;
};

inline std::map<std::string, std::string> construction_params(const ConstructionSpec& s) {
  std::map<std::string, std::string> p{{"construction", "c" + std::to_string(s.which)},
                                       {"n", std::to_string(s.n)}};
  if (s.which == 2 || s.which == 3 || s.which == 5) p["t"] = std::to_string(s.t);
  if (s.which >= 4) p["r"] = std::to_string(s.r);
  if (s.which == 4) p["k"] = std::to_string(s.k);
  return p;
}

/// (n, r, k) instances of Construction 4 checked against m * m'.
inline std::vector<std::array<int, 3>> construction4_triples() {
  return {{12, 3, 1}, {12, 3, 2}, {20, 3, 2}, {16, 4, 1}, {16, 4, 2}, {16, 4, 3}, {20, 4, 3},
          {24, 4, 2}, {15, 5, 1}, {15, 5, 2}, {15, 5, 3}, {15, 5, 4}, {10, 5, 4}, {30, 5, 3},
          {18, 6, 1}, {18, 6, 3}, {18, 6, 5}, {24, 6, 4}, {40, 6, 2}, {40, 4, 3}};
}

/// Construction instances swept by the `constructions` and `weighted` suites.
inline std::vector<ConstructionSpec> construction_sweep() {
  std::vector<ConstructionSpec> out;
  for (int n = 8; n <= 40; ++n) {
    out.push_back({1, n});
    for (int t = 2; t - 1 <= n / 4; ++t) {
      out.push_back({2, n, t});
      out.push_back({3, n, t});
    }
  }
  for (auto [n, r, k] : construction4_triples()) out.push_back({4, n, 0, r, k});
  for (int r = 3; r <= 5; ++r)
    for (int t = std::max(2, r - 2); t <= 4; ++t)
      for (int n = 2 * r; n <= 40; ++n) {
        ConstructionSpec s{5, n, t, r, r - 1};
        try {
          validate(s);
        } catch (const ParameterError&) {
          continue;
        }
        out.push_back(s);
      }
  return out;
}

struct FreenessClaim {
  ConstructionSpec spec;
  PatternGraph pattern;
  bool expect_copy = false;
};

/// Detector-checked structural claims about the constructions.
inline std::vector<FreenessClaim> freeness_claims() {
  std::vector<FreenessClaim> out;
  for (int n = 8; n <= 14; ++n) out.push_back({{1, n}, make_clique(3)});
  for (int t : {3, 4})
    for (int n = 8; n <= 16; ++n)
      if (t - 1 <= n / 4) {
        out.push_back({{3, n, t}, make_book(t)});
        out.push_back({{3, n, t}, make_book(t - 1), true});
      }
  for (auto [r, t, n] : {std::array{4, 2, 16}, {4, 3, 16}, {5, 2, 15}})
    out.push_back({{4, n, 0, r, std::min(r - 1, t + 1)}, make_book(t)});
  for (auto [r, t, n] : {std::array{4, 1, 16}, {5, 2, 15}})
    out.push_back({{4, n, 0, r, std::min(r - 1, 2 * t)}, make_fan(t)});
  return out;
}

inline std::vector<BoundReport> constructions_suite() {
  std::vector<BoundReport> out;
  for (const auto& s : construction_sweep()) {
    const auto h = build(s);
    const auto expected = static_cast<std::int64_t>(expected_size(s));
    const auto actual = static_cast<std::int64_t>(h.size());
    auto params = construction_params(s);
    params["expected"] = std::to_string(expected);
    params["actual"] = std::to_string(actual);
    out.push_back(make_report("size_exact", actual > expected ? actual - expected : expected - actual,
                              0, params));
  }
  for (const auto& c : freeness_claims()) {
    const auto h = build(c.spec);
    const auto w = find_berge_copy(h, c.pattern);
    auto params = construction_params(c.spec);
    params["F"] = c.pattern.spec();
    if (c.expect_copy) {
      const bool ok = w && verify_witness(h, c.pattern, *w);
      out.push_back(make_report("contains_berge_copy", ok ? 0 : 1, 0, params));
    } else {
      out.push_back(make_report("berge_free", w ? 1 : 0, 0, params));
    }
  }
  return out;
}

inline std::vector<PatternGraph> suite_patterns(const SuiteOptions& o,
                                                std::vector<std::string> defaults) {
  std::vector<PatternGraph> out;
  if (o.pattern) {
    out.push_back(parse_pattern(*o.pattern));
    return out;
  }
  for (const auto& s : defaults) out.push_back(parse_pattern(s));
  return out;
}

inline std::vector<BoundReport> sandwich_suite(const SuiteOptions& o) {
  std::vector<BoundReport> out;
  const int lo = o.n ? *o.n : 4;
  const int hi = o.n ? *o.n : 6;
  for (const auto& f : suite_patterns(o, {"clique:3", "book:2"}))
    for (int n = lo; n <= hi; ++n) {
      auto [lower, upper] = check_sandwich(n, o.r, f);
      out.push_back(lower);
      out.push_back(upper);
    }
  return out;
}

inline std::vector<BoundReport> fre_suite(const SuiteOptions& o) {
  std::vector<BoundReport> out;
  const auto f = suite_patterns(o, {"book:2"}).front();
  const int max_n = o.n ? *o.n : 8;
  if (max_n >= 8) {
    auto report = check_fre_bound(construction1(8), f);
    report.name = "fre_bound_construction1";
    out.push_back(report);
  }
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.samples; ++i) {
    const int n = std::uniform_int_distribution<int>(o.r, std::max(o.r, max_n))(rng);
    const auto cap = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
    const auto h = random_berge_free(n, o.r, f, rng, cap);
    if (find_berge_copy(h, f)) throw std::logic_error("random sample is not Berge-free");
    auto report = check_fre_bound(h, f);
    report.params["sample"] = std::to_string(i);
    out.push_back(report);
  }
  return out;
}

inline std::vector<BoundReport> weighted_suite(const SuiteOptions& o) {
  std::vector<BoundReport> out;
  const auto f = suite_patterns(o, {"book:2"}).front();
  for (const auto& s : construction_sweep()) {
    const auto h = build(s);
    const auto sums = weighted_sums(h, f);
    out.push_back(make_report("size_minus_two_sum", sums.size_minus_two,
                              Rational(std::int64_t{s.n} * s.n, 4), construction_params(s)));
  }
  // w(s) >= C(s,2) - (|V(F)|-2) s / 2 for s > |V(F)|.
  for (int s = f.n() + 1; s <= f.n() + 12; ++s) {
    const Rational lower =
        Rational(std::int64_t{s} * (s - 1), 2) - Rational(std::int64_t{f.n() - 2} * s, 2);
    out.push_back(make_report("weight_lower_bound", lower, hyperedge_weight(s, f),
                              {{"size", std::to_string(s)}, {"F", f.spec()}}));
  }
  return out;
}

inline void print_reports(std::ostream& out, const std::vector<BoundReport>& reports,
                          io::Format format) {
  if (format == io::Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(io::to_json(r));
    out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) {
    out << (r.holds ? "PASS " : "FAIL ") << r.name << " " << to_string(r.lhs)
        << " <= " << to_string(r.rhs);
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    out << "\n";
  }
}

inline Hypergraph load_input(const std::string& path) {
  if (path == "-") {
    std::string data{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return io::parse_hypergraph(data);
  }
  return io::parse_hypergraph(io::read_file(path));
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berge hypergraph constructions, detection and extremal checks", "bergex"};
  app.require_subcommand(1);

  std::string type, format = "text";
  int n = 0, t = 0, r = 0, k = 0;
  auto* construct = app.add_subcommand("construct", "Generate a lower-bound construction");
  construct->add_option("--type", type, "c1|c2|c3|c4|c5")
      ->required()
      ->check(CLI::IsMember({"c1", "c2", "c3", "c4", "c5"}));
  construct->add_option("--n", n, "vertex count")->required();
  construct->add_option("--t", t, "book/fan parameter");
  construct->add_option("--r", r, "uniformity");
  construct->add_option("--k", k, "left block size");
  construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string pattern, input;
  bool want_witness = false;
  auto* check = app.add_subcommand("check", "Look for a Berge copy of a pattern");
  check->add_option("--pattern", pattern, "clique:r | book:t | fan:t | kab:1,a,b | turan:n,q")
      ->required();
  check->add_option("--input", input, "hypergraph file, '-' for stdin")->required();
  check->add_flag("--witness", want_witness, "print the witness as JSON");

  int p = 2;
  auto* classify = app.add_subcommand("classify", "Multiplicities, heavy/light edges, partition");
  classify->add_option("--input", input)->required();
  classify->add_option("--p", p, "threshold")->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::uint64_t budget = default_search_budget;
  auto* search = app.add_subcommand("search", "Exact ex_r(n, Berge-F) by branch and bound");
  search->add_option("--n", n)->required();
  search->add_option("--r", r)->required();
  search->add_option("--pattern", pattern)->required();
  search->add_option("--budget", budget, "node budget");

  std::string suite;
  SuiteOptions so;
  auto* verify = app.add_subcommand("verify", "Run a bound/claim suite");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"sandwich", "fre", "weighted", "constructions"}));
  verify->add_option("--n", so.n, "vertex count (sandwich) or maximum n (fre)");
  verify->add_option("--r", so.r, "uniformity");
  verify->add_option("--pattern", so.pattern);
  verify->add_option("--samples", so.samples, "random samples (fre)");
  verify->add_option("--seed", so.seed);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const auto fmt = io::parse_format(format);
    if (construct->parsed()) {
      ConstructionSpec s{type[1] - '0', n, t, r ? r : 3, k};
      if (s.which == 5) s.k = s.r - 1;
      const auto h = build(s);
      const auto expected = expected_size(s);
      if (fmt == io::Format::json) {
        auto j = io::to_json(h);
        j["expected_size"] = expected;
        j["construction"] = construction_params(s);
        out << j.dump() << "\n";
      } else {
        out << "# " << type << " n=" << n;
        for (const auto& [key, v] : construction_params(s))
          if (key != "construction" && key != "n") out << " " << key << "=" << v;
        out << " expected_size=" << expected << "\n" << io::serialize_hypergraph(h);
      }
      return exit_ok;
    }
    if (check->parsed()) {
      const auto f = parse_pattern(pattern);
      const auto h = load_input(input);
      const auto w = find_berge_copy(h, f);
      if (!w) {
        out << "FREE\n";
        return exit_ok;
      }
      if (!verify_witness(h, f, *w)) throw std::logic_error("detector produced an invalid witness");
      out << "BERGE_COPY\n";
      if (want_witness) out << io::to_json(*w, f, h).dump() << "\n";
      return exit_found;
    }
    if (classify->parsed()) {
      const auto h = load_input(input);
      const auto c = classify_edges(h, p);
      const auto part = partition_hypergraph(h, p);
      nlohmann::json j;
      j["p"] = p;
      nlohmann::json mult = nlohmann::json::array();
      for (const auto& [e, m] : c.multiplicity) mult.push_back({io::to_json(e), m});
      j["multiplicity"] = mult;
      j["heavy"] = io::edge_set_json(c.heavy);
      j["light"] = io::edge_set_json(c.light);
      nlohmann::json parts = nlohmann::json::array();
      for (Part x : part.part_of) parts.push_back(to_string(x));
      j["partition"] = {{"H1", part.count(Part::h1)}, {"H2", part.count(Part::h2)},
                        {"H3", part.count(Part::h3)}, {"part_of", parts},
                        {"G1", io::to_json(part.g1)}, {"G2", io::to_json(part.g2)},
                        {"G3", io::to_json(part.g3)}};
      const bool three_uniform = h.empty() || h.uniformity() == 3;
      if (three_uniform) {
        const auto col = color_shadow(h, p);
        j["coloring"] = {{"red", io::edge_set_json(col.red)}, {"blue", io::edge_set_json(col.blue)}};
      }
      if (fmt == io::Format::json) {
        out << j.dump() << "\n";
      } else {
        out << "p=" << p << " shadow_edges=" << c.multiplicity.size() << " heavy=" << c.heavy.size()
            << " light=" << c.light.size() << "\n";
        out << "H1=" << part.count(Part::h1) << " H2=" << part.count(Part::h2)
            << " H3=" << part.count(Part::h3) << "\n";
        out << "G1=" << part.g1.edge_count() << " G2=" << part.g2.edge_count()
            << " G3=" << part.g3.edge_count() << "\n";
        if (three_uniform)
          out << "red=" << j["coloring"]["red"].size() << " blue=" << j["coloring"]["blue"].size()
              << "\n";
      }
      return exit_ok;
    }
    if (search->parsed()) {
      const auto f = parse_pattern(pattern);
      auto j = io::to_json(exact_berge_turan(n, r, f, budget));
      j["n"] = n;
      j["r"] = r;
      j["pattern"] = f.spec();
      out << j.dump() << "\n";
      return exit_ok;
    }
    std::vector<BoundReport> reports;
    if (suite == "sandwich") reports = sandwich_suite(so);
    if (suite == "fre") reports = fre_suite(so);
    if (suite == "weighted") reports = weighted_suite(so);
    if (suite == "constructions") reports = constructions_suite();
    print_reports(out, reports, fmt);
    for (const auto& rep : reports)
      if (!rep.holds) return exit_found;
    return exit_ok;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return exit_capacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace berge::cli
