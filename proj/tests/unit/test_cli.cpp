#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mkvis/edge_list.hpp"
#include "mkvis/generators.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  int status = mkvis::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string gen(const std::vector<std::string>& args) {
  std::vector<std::string> full{"gen"};
  full.insert(full.end(), args.begin(), args.end());
  Run r = run(full);
  REQUIRE(r.status == 0);
  return r.out;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("mkvis_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

json without_timing(json report) {
  report.erase("timing");
  return report;
}

}  // namespace

TEST_CASE("mu on a path file") {
  std::string file = write_temp("path7.edges", gen({"path", "7"}));
  Run r = run({"mu", "--input", file, "-k", "1"});
  REQUIRE(r.status == 0);
  json j = r.report();
  CHECK(j["command"] == "mu");
  CHECK(j["version"] == mkvis::cli::kVersion);
  CHECK(j["input"]["n"] == 7);
  CHECK(j["input"]["m"] == 6);
  CHECK(j["input"]["params"]["k"] == 1);
  CHECK(j["result"]["value"] == 3);
  CHECK(j["timing"]["wall_ms"].is_number());
}

TEST_CASE("strict check reports the offending pair") {
  Run r = run({"check", "-k", "0", "--set", "0,2,4", "--strict"}, gen({"path", "5"}));
  CHECK(r.status == 1);
  json j = r.report();
  CHECK(j["result"]["verdict"] == false);
  CHECK(j["result"]["offending_pair"]["u"] == 0);
  CHECK(j["result"]["offending_pair"]["v"] == 4);
  CHECK(j["result"]["offending_pair"]["count"] == 1);

  Run lax = run({"check", "-k", "0", "--set", "0,2,4"}, gen({"path", "5"}));
  CHECK(lax.status == 0);
  CHECK(lax.report()["result"]["verdict"] == false);

  Run ok = run({"check", "-k", "1", "--set", "0, 2, 4", "--strict"}, gen({"path", "5"}));
  CHECK(ok.status == 0);
  CHECK(ok.report()["result"]["verdict"] == true);

  Run variant = run({"check", "-k", "0", "--set", "1,2", "--variant", "total", "--strict"}, gen({"path", "4"}));
  CHECK(variant.status == 1);
}

TEST_CASE("tau on a cycle returns a valid partition") {
  std::string file = write_temp("cycle6.edges", gen({"cycle", "6"}));
  Run r = run({"tau", "--input", file, "-k", "0"});
  REQUIRE(r.status == 0);
  json j = r.report();
  CHECK(j["result"]["value"] == 2);
  REQUIRE(j["result"]["partition"].size() == 2);
  std::vector<int> seen;
  for (const auto& part : j["result"]["partition"]) {
    std::string ids;
    for (const auto& v : part) {
      ids += (ids.empty() ? "" : ",") + std::to_string(v.get<int>());
      seen.push_back(v.get<int>());
    }
    CHECK(run({"check", "--input", file, "-k", "0", "--set", ids, "--strict"}).status == 0);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("witnesses re-validate through check") {
  std::string graph = gen({"random", "10", "--p", "0.25", "--seed", "4"});
  for (const std::string k : {"0", "1", "2"}) {
    Run r = run({"mu", "-k", k}, graph);
    REQUIRE(r.status == 0);
    std::string ids;
    for (const auto& v : r.report()["result"]["witness"]) ids += (ids.empty() ? "" : ",") + std::to_string(v.get<int>());
    CHECK(run({"check", "-k", k, "--set", ids, "--strict"}, graph).status == 0);
  }
  for (const std::string variant : {"total", "outer", "dual"}) {
    Run r = run({"mu-variant", "-k", "1", "--variant", variant}, graph);
    REQUIRE(r.status == 0);
    std::string ids;
    for (const auto& v : r.report()["result"]["witness"]) ids += (ids.empty() ? "" : ",") + std::to_string(v.get<int>());
    CHECK(run({"check", "-k", "1", "--variant", variant, "--set", ids, "--strict"}, graph).status == 0);
  }
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"mu", "--bogus"}, gen({"path", "3"})).status == 2);
  CHECK(run({"mu", "-k", "-1"}, gen({"path", "3"})).status == 2);
  CHECK(run({"check", "-k", "0"}, gen({"path", "3"})).status == 2);
  CHECK(run({"check", "--set", "0,9"}, gen({"path", "3"})).status == 2);
  CHECK(run({"check", "--set", "0,x"}, gen({"path", "3"})).status == 2);
  CHECK(run({"check", "--set", "0,,1"}, gen({"path", "3"})).status == 2);
  CHECK(run({"mu-variant", "-k", "0"}, gen({"path", "3"})).status == 2);
  CHECK(run({"mu", "--input", "/nonexistent/graph.edges"}).status == 2);
  CHECK(run({"gen", "torus", "3"}).status == 2);
  CHECK(run({"gen", "path"}).status == 2);
  CHECK(run({"mu-block"}, gen({"cycle", "5"})).status == 2);
  CHECK(run({"mu"}, "4 2\n0 1\n2 3\n").status == 2);

  Run bad = run({"mu"}, "3 2\n0 1\n1 q\n");
  CHECK(bad.status == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(bad.out.empty());
}

TEST_CASE("size limits exit 3 and can be raised") {
  std::string big = gen({"path", "30"});
  CHECK(run({"mu"}, big).status == 3);
  Run raised = run({"mu", "--max-n", "30"}, big);
  CHECK(raised.status == 0);
  CHECK(raised.report()["result"]["value"] == 2);
  CHECK(run({"tau"}, gen({"path", "17"})).status == 3);
  CHECK(run({"poly"}, gen({"path", "19"})).status == 3);
  CHECK(run({"oracle", "--oracle-cap", "1", "--queries", "40", "--sets", "0"}, gen({"cycle", "8"})).status == 3);
}

TEST_CASE("help exits 0") {
  Run r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("Subcommands") != std::string::npos);
  CHECK(run({"tau", "--help"}).status == 0);
}

TEST_CASE("gen output round-trips through the parser") {
  using namespace mkvis;
  CHECK(parse_edge_list(gen({"path", "6"})) == path_graph(6));
  CHECK(parse_edge_list(gen({"cycle", "5"})) == cycle_graph(5));
  CHECK(parse_edge_list(gen({"complete", "4"})) == complete_graph(4));
  CHECK(parse_edge_list(gen({"bipartite", "2", "3"})) == complete_bipartite(2, 3));
  CHECK(parse_edge_list(gen({"random", "12", "--p", "0.2", "--seed", "9"})) == random_connected(12, 0.2, 9));
  CHECK(parse_edge_list(gen({"block", "4", "3", "--seed", "5"})) == random_block_graph(4, 3, 5));
  std::string text = gen({"random", "12", "--seed", "77"});
  CHECK(text.find("# seed 77") != std::string::npos);

  for (const std::string command : {"mu", "gp", "poly", "bounds", "tau", "cover-greedy", "blocks", "oracle"}) {
    Run r = run({command}, text);
    CHECK_MESSAGE(r.status == 0, command);
    CHECK(r.report()["input"]["n"] == 12);
  }
}

TEST_CASE("reports are deterministic apart from timing") {
  std::string graph = gen({"random", "11", "--seed", "3"});
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"mu", "-k", "1"}, {"tau", "-k", "0"}, {"oracle", "--seed", "5"}, {"poly", "-k", "2"}}) {
    CHECK(without_timing(run(args, graph).report()) == without_timing(run(args, graph).report()));
  }
  CHECK(gen({"random", "20", "--seed", "8"}) == gen({"random", "20", "--seed", "8"}));
}

TEST_CASE("json input") {
  Run r = run({"mu", "--json", "-k", "0"}, R"({"n": 4, "edges": [[0,1],[1,2],[2,3]]})");
  REQUIRE(r.status == 0);
  CHECK(r.report()["result"]["value"] == 2);
  CHECK(run({"mu", "--json"}, "{\"n\": 2").status == 2);
}

TEST_CASE("block and bounds payloads") {
  std::string bowtie = "5 6\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n";
  json b = run({"blocks"}, bowtie).report()["result"];
  CHECK(b["articulation"] == json::array({2}));
  CHECK(b["blocks"] == json::parse("[[0,1,2],[2,3,4]]"));
  CHECK(b["tree_edges"] == json::parse("[[0,1],[0,2]]"));
  CHECK(b["projection"] == json::parse("[1,1,0,2,2]"));
  CHECK(b["is_block_graph"] == true);

  json mb = run({"mu-block", "-k", "0"}, bowtie).report()["result"];
  CHECK(mb["value"] == 4);
  CHECK(mb["z"] == json::parse("[1,2]"));

  json bounds = run({"bounds", "-k", "0"}, gen({"cycle", "7"})).report()["result"];
  CHECK(bounds["diameter_bound"] == 5);
  CHECK(bounds["girth_bound"] == 3);
  CHECK(bounds["upper"] == 3);
  json tree = run({"bounds", "-k", "1"}, gen({"path", "6"})).report()["result"];
  CHECK(tree["girth_bound"].is_null());
  json isometric = run({"bounds", "-k", "1", "--path", "0,1,2,3,4"}, gen({"cycle", "8"})).report()["result"];
  CHECK(isometric["isometric_bound"] == 6);
  CHECK(run({"bounds", "--path", "0,1,2,3,4,5"}, gen({"cycle", "8"})).status == 2);
}

TEST_CASE("oracle subcommand agrees with the kernel") {
  Run r = run({"oracle", "-k", "1", "--queries", "200", "--sets", "100", "--seed", "12"},
              gen({"random", "10", "--p", "0.3", "--seed", "2"}));
  CHECK(r.status == 0);
  json j = r.report();
  CHECK(j["result"]["agree"] == true);
  CHECK(j["input"]["seed"] == 12);
}
