#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "mkvis/block_graphs.hpp"
#include "mkvis/covering.hpp"
#include "mkvis/edge_list.hpp"
#include "mkvis/error.hpp"
#include "mkvis/generators.hpp"
#include "mkvis/kernel.hpp"
#include "mkvis/oracle.hpp"
#include "mkvis/solvers.hpp"

namespace mkvis::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string input = "-";
  bool json_input = false;
  int k = 0;
  std::string set;
  bool strict = false;
  std::string variant;
  std::string path;
  int max_n = 0;
  std::uint64_t oracle_cap = kDefaultGeodesicCap;
  std::uint64_t seed = 1;
  int queries = 50;
  int sets = 50;
  double p = 0.3;
  std::string family;
  std::vector<int> sizes;
};

std::vector<Vertex> parse_ids(const std::string& text, const char* flag) {
  std::vector<Vertex> ids;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string field = text.substr(start, end - start);
    auto first = field.find_first_not_of(" \t");
    auto last = field.find_last_not_of(" \t");
    if (first == std::string::npos) {
      if (!(text.find_first_not_of(" \t") == std::string::npos)) {
        throw InvalidInput(std::string("empty id in ") + flag);
      }
    } else {
      field = field.substr(first, last - first + 1);
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw InvalidInput(std::string("bad vertex id '") + field + "' in " + flag);
      }
      ids.push_back(v);
    }
    start = end + 1;
  }
  return ids;
}

VertexSet parse_set(const Graph& g, const std::string& text, const char* flag) {
  VertexSet s(parse_ids(text, flag));
  s.validate(g);
  return s;
}

Graph load_graph(const Options& o, std::istream& in) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(o.input, std::ios::binary);
    if (!file) throw InvalidInput("cannot open input '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return o.json_input ? parse_json_graph(text) : parse_edge_list(text);
}

json ids(const VertexSet& s) { return json(s.members()); }

json partition_json(const Partition& p) {
  json parts = json::array();
  for (const auto& part : p.parts) parts.push_back(ids(part));
  return parts;
}

json counters_json(const KernelCounters& c) {
  return {{"kernel_runs", c.kernel_runs},
          {"vertex_visits", c.vertex_visits},
          {"edge_touches", c.edge_touches},
          {"pair_tests", c.pair_tests}};
}

json check_json(const CheckReport& r) {
  json j{{"verdict", r.verdict}, {"k", r.k}, {"work", counters_json(r.work)}};
  if (r.offending_pair) {
    const auto& p = *r.offending_pair;
    j["reason"] = r.reason == CheckFailure::kDifferentComponents ? "different_components" : "count_exceeded";
    j["offending_pair"] = {{"u", p.u}, {"v", p.v}};
    if (is_finite(p.count)) {
      j["offending_pair"]["count"] = p.count;
    } else {
      j["offending_pair"]["count"] = nullptr;
    }
  }
  return j;
}

json solve_json(const SolveResult& r) {
  return {{"value", r.value}, {"witness", ids(r.witness)}, {"nodes_explored", r.nodes_explored}};
}

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json bounds_json(const BoundsRecord& b) {
  return {{"n", b.n},
          {"k", b.k},
          {"diameter", b.diameter},
          {"girth", optional_json(b.girth)},
          {"diameter_bound", b.diameter_bound},
          {"girth_bound", optional_json(b.girth_bound)},
          {"trivial_bound", b.trivial_bound},
          {"gp_lower", optional_json(b.gp_lower)},
          {"degree_lower", b.degree_lower},
          {"isometric_bound", b.isometric_bound},
          {"isometric_path", b.isometric_path},
          {"upper", b.min_upper()},
          {"lower", b.max_lower()}};
}

Variant require_variant(const std::string& name) {
  auto v = parse_variant(name);
  if (!v) throw InvalidInput("unknown variant '" + name + "' (expected total, outer or dual)");
  return *v;
}

struct Outcome {
  json params = json::object();
  json result;
  std::optional<std::uint64_t> seed;
  int status = kOk;
};

using Command = std::function<Outcome(const Graph&, const Options&)>;

Outcome cmd_check(const Graph& g, const Options& o) {
  Outcome out;
  VertexSet s = parse_set(g, o.set, "--set");
  out.params = {{"k", o.k}, {"set", ids(s)}, {"variant", o.variant}, {"strict", o.strict}};
  CheckReport r = o.variant == "plain" ? mkv_check(g, s, o.k) : check_variant(g, s, o.k, require_variant(o.variant));
  out.result = check_json(r);
  if (o.strict && !r.verdict) out.status = kNegative;
  return out;
}

Outcome cmd_mu(const Graph& g, const Options& o) {
  SolveLimits limits;
  limits.mu_max_n = o.max_n;
  Outcome out;
  out.params = {{"k", o.k}, {"max_n", o.max_n}};
  auto r = mu_k(g, o.k, limits);
  out.result = solve_json(r);
  auto b = bounds(g, o.k, std::nullopt, SolveLimits{.gp_max_n = 0});
  out.result["girth_bound_exceeded"] = exceeds_girth_bound(b, r.value);
  return out;
}

Outcome cmd_mu_variant(const Graph& g, const Options& o) {
  SolveLimits limits;
  limits.variant_max_n = o.max_n;
  Outcome out;
  Variant v = require_variant(o.variant);
  out.params = {{"k", o.k}, {"variant", o.variant}, {"max_n", o.max_n}};
  out.result = solve_json(mu_k_variant(g, o.k, v, limits));
  return out;
}

Outcome cmd_gp(const Graph& g, const Options& o) {
  SolveLimits limits;
  limits.gp_max_n = o.max_n;
  Outcome out;
  out.params = {{"max_n", o.max_n}};
  out.result = solve_json(gp_number(g, limits));
  return out;
}

Outcome cmd_poly(const Graph& g, const Options& o) {
  SolveLimits limits;
  limits.poly_max_n = o.max_n;
  Outcome out;
  out.params = {{"k", o.k}, {"max_n", o.max_n}};
  auto p = visibility_polynomial(g, o.k, limits);
  out.result = {{"coefficients", p.coefficients}, {"degree", p.degree()}, {"total", p.total()}};
  return out;
}

Outcome cmd_bounds(const Graph& g, const Options& o) {
  SolveLimits limits;
  limits.gp_max_n = o.max_n;
  Outcome out;
  out.params = {{"k", o.k}, {"max_n", o.max_n}};
  std::optional<std::span<const Vertex>> path;
  std::vector<Vertex> path_ids;
  if (!o.path.empty()) {
    path_ids = parse_ids(o.path, "--path");
    for (Vertex v : path_ids) {
      if (!g.contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " in --path is not in the graph");
    }
    path = std::span<const Vertex>(path_ids);
    out.params["path"] = path_ids;
  }
  out.result = bounds_json(bounds(g, o.k, path, limits));
  return out;
}

Outcome cmd_tau(const Graph& g, const Options& o) {
  SolveLimits limits;
  limits.tau_max_n = o.max_n;
  Outcome out;
  out.params = {{"k", o.k}, {"max_n", o.max_n}};
  auto r = tau_k(g, o.k, limits);
  out.result = {{"value", r.value},
                {"partition", partition_json(r.partition)},
                {"lower_bound_used", r.lower_bound_used},
                {"certificate", r.certificate == CoverCertificate::kMuLower ? "mu_lower" : "exhaustive"},
                {"nodes_explored", r.nodes_explored}};
  return out;
}

Outcome cmd_cover_greedy(const Graph& g, const Options& o) {
  Outcome out;
  out.params = {{"k", o.k}};
  auto p = greedy_cover(g, o.k);
  out.result = {{"parts", p.size()}, {"partition", partition_json(p)}};
  return out;
}

Outcome cmd_blocks(const Graph& g, const Options&) {
  Outcome out;
  auto t = block_decomposition(g);
  json edges = json::array();
  for (auto [a, b] : t.tree_edges) edges.push_back({a, b});
  out.result = {{"articulation", t.articulation},
                {"blocks", t.blocks},
                {"tree_edges", edges},
                {"projection", t.projection},
                {"is_block_graph", is_block_graph(g)}};
  return out;
}

Outcome cmd_mu_block(const Graph& g, const Options& o) {
  SolveLimits limits;
  limits.block_max_nodes = o.max_n;
  Outcome out;
  out.params = {{"k", o.k}, {"max_nodes", o.max_n}};
  auto r = mu_k_block(g, o.k, limits);
  out.result = solve_json(r.result);
  out.result["z"] = r.z;
  return out;
}

Outcome cmd_oracle(const Graph& g, const Options& o) {
  require_connected(g, "oracle");
  Outcome out;
  out.seed = o.seed;
  out.params = {{"k", o.k}, {"queries", o.queries}, {"sets", o.sets}, {"oracle_cap", o.oracle_cap}};
  std::mt19937_64 rng(o.seed);
  const int n = g.order();
  auto random_set = [&] {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (bounded(rng, 2)) members.push_back(v);
    }
    return VertexSet(std::move(members));
  };
  int count_mismatches = 0;
  int verdict_mismatches = 0;
  json first = nullptr;
  for (int q = 0; q < o.queries; ++q) {
    VertexSet x = random_set();
    auto u = static_cast<Vertex>(bounded(rng, static_cast<std::uint64_t>(n)));
    auto w = static_cast<Vertex>(bounded(rng, static_cast<std::uint64_t>(n)));
    int kernel = min_internal_count(g, x, u, w);
    int oracle = oracle_min_internal_count(g, x, u, w, o.oracle_cap);
    if (kernel != oracle) {
      ++count_mismatches;
      if (first.is_null()) {
        first = {{"x", ids(x)}, {"u", u}, {"w", w}, {"kernel", kernel}, {"oracle", oracle}};
      }
    }
  }
  for (int q = 0; q < o.sets; ++q) {
    VertexSet s = random_set();
    bool kernel = mkv_check(g, s, o.k).verdict;
    bool oracle = oracle_is_mutual_k_visible(g, s, o.k, o.oracle_cap);
    if (kernel != oracle) {
      ++verdict_mismatches;
      if (first.is_null()) first = {{"set", ids(s)}, {"kernel", kernel}, {"oracle", oracle}};
    }
  }
  out.result = {{"count_queries", o.queries},
                {"count_mismatches", count_mismatches},
                {"set_queries", o.sets},
                {"verdict_mismatches", verdict_mismatches},
                {"agree", count_mismatches + verdict_mismatches == 0},
                {"first_mismatch", first}};
  if (count_mismatches + verdict_mismatches > 0) out.status = kNegative;
  return out;
}

Graph generate(const Options& o, std::vector<std::string>& comments) {
  const auto& a = o.sizes;
  auto need = [&](std::size_t count, const char* usage) {
    if (a.size() != count) throw InvalidInput(std::string("usage: gen ") + usage);
  };
  std::string line = "mkvis gen " + o.family;
  for (int v : a) line += " " + std::to_string(v);
  comments.push_back(line);
  if (o.family == "path") {
    need(1, "path N");
    return path_graph(a[0]);
  }
  if (o.family == "cycle") {
    need(1, "cycle N");
    return cycle_graph(a[0]);
  }
  if (o.family == "complete") {
    need(1, "complete N");
    return complete_graph(a[0]);
  }
  if (o.family == "bipartite") {
    need(2, "bipartite M N");
    return complete_bipartite(a[0], a[1]);
  }
  if (o.family == "random") {
    need(1, "random N [--p P] [--seed S]");
    if (!(o.p >= 0.0 && o.p <= 1.0)) throw InvalidInput("--p must lie in [0, 1]");
    std::ostringstream p;
    p << "p " << o.p;
    comments.push_back(p.str());
    comments.push_back("seed " + std::to_string(o.seed));
    return random_connected(a[0], o.p, o.seed);
  }
  if (o.family == "block") {
    need(2, "block BLOCKS MAX_SIZE [--seed S]");
    comments.push_back("seed " + std::to_string(o.seed));
    return random_block_graph(a[0], a[1], o.seed);
  }
  throw InvalidInput("unknown family '" + o.family + "' (expected path, cycle, complete, bipartite, random, block)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutual k-visibility in graphs", "mkvis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    Command command;
    int default_max_n;  // 0: no --max-n
    bool uses_k;
  };
  const SolveLimits defaults;
  const std::vector<Spec> specs = {
      {"check", "Test whether --set is mutual k-visible", cmd_check, 0, true},
      {"mu", "Exact mutual k-visibility number", cmd_mu, defaults.mu_max_n, true},
      {"mu-variant", "Exact total, outer or dual variant number", cmd_mu_variant, defaults.variant_max_n, true},
      {"gp", "Exact general position number", cmd_gp, defaults.gp_max_n, false},
      {"poly", "k-visibility polynomial coefficients", cmd_poly, defaults.poly_max_n, true},
      {"bounds", "Upper and lower bounds on mu_k", cmd_bounds, defaults.gp_max_n, true},
      {"tau", "Exact covering number", cmd_tau, defaults.tau_max_n, true},
      {"cover-greedy", "First-fit mutual k-visibility cover", cmd_cover_greedy, 0, true},
      {"blocks", "Block-cutpoint tree and block graph test", cmd_blocks, 0, false},
      {"mu-block", "mu_k of a block graph via admissible node sets", cmd_mu_block, defaults.block_max_nodes, true},
      {"oracle", "Compare the kernel with geodesic enumeration", cmd_oracle, 0, true},
  };

  std::vector<std::pair<CLI::App*, const Spec*>> commands;
  std::vector<int> max_n(specs.size());
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--input", o.input, "Edge-list file, '-' for stdin")->capture_default_str();
    sub->add_flag("--json", o.json_input, "Input is {\"n\":..,\"edges\":[[u,v],..]}");
    if (spec.uses_k) sub->add_option("-k", o.k, "Tolerance")->check(CLI::NonNegativeNumber)->capture_default_str();
    if (spec.default_max_n > 0) {
      max_n[commands.size()] = spec.default_max_n;
      sub->add_option("--max-n", max_n[commands.size()], spec.name == std::string("mu-block") ? "Useful tree node limit" : "Order limit")
          ->check(CLI::NonNegativeNumber)
          ->capture_default_str();
    }
    commands.emplace_back(sub, &spec);
  }
  auto* check = commands[0].first;
  check->add_option("--set", o.set, "Comma-separated vertex ids")->required();
  check->add_flag("--strict", o.strict, "Exit 1 on a negative verdict");
  check->add_option("--variant", o.variant, "plain, total, outer or dual")
      ->check(CLI::IsMember({"plain", "total", "outer", "dual"}))
      ->default_val("plain");
  commands[2].first->add_option("--variant", o.variant, "total, outer or dual")
      ->check(CLI::IsMember({"total", "outer", "dual"}))
      ->required();
  commands[5].first->add_option("--path", o.path, "Comma-separated isometric path");
  auto* oracle = commands[10].first;
  oracle->add_option("--queries", o.queries, "Random (X, u, w) count queries")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  oracle->add_option("--sets", o.sets, "Random sets checked against the oracle")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  oracle->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  oracle->add_option("--oracle-cap", o.oracle_cap, "Geodesic enumeration cap")->capture_default_str();

  CLI::App* gen = app.add_subcommand("gen", "Emit a generated graph as an edge list");
  gen->add_option("family", o.family, "path, cycle, complete, bipartite, random, block")->required();
  gen->add_option("sizes", o.sizes, "Family parameters");
  gen->add_option("--p", o.p, "Extra edge probability for random")->capture_default_str();
  gen->add_option("--seed", o.seed, "RNG seed for random and block")->capture_default_str();

  std::vector<const char*> argv{"mkvis"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      std::vector<std::string> comments;
      Graph g = generate(o, comments);
      out << format_edge_list(g, comments);
      return kOk;
    }
    for (std::size_t i = 0; i < commands.size(); ++i) {
      const auto& [sub, spec] = commands[i];
      if (!sub->parsed()) continue;
      o.max_n = max_n[i];
      Graph g = load_graph(o, in);
      auto start = std::chrono::steady_clock::now();
      Outcome r = spec->command(g, o);
      auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      json report{{"command", spec->name},
                  {"version", kVersion},
                  {"input", {{"n", g.order()}, {"m", g.size()}, {"params", r.params}}},
                  {"result", r.result},
                  {"timing", {{"wall_ms", elapsed.count()}}}};
      if (r.seed) report["input"]["seed"] = *r.seed;
      out << report.dump(2) << '\n';
      return r.status;
    }
  } catch (const LimitExceeded& e) {
    err << "mkvis: limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const Error& e) {
    err << "mkvis: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "mkvis: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mkvis::cli
