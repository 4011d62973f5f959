#include "mkvis/edge_list.hpp"

#include <charconv>
#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mkvis/error.hpp"

namespace mkvis {

namespace {

// Splits a comment-stripped line into integer fields.
std::vector<long long> fields(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [end, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || end != line.data() + j) {
      throw ParseError(line_no, "expected an integer, found '" + std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto f = fields(body, line_no);
    if (f.empty()) continue;
    if (f.size() != 2) throw ParseError(line_no, "expected two integers, found " + std::to_string(f.size()));
    if (n < 0) {
      if (f[0] < 0 || f[1] < 0 || f[0] > (1 << 24)) throw ParseError(line_no, "invalid header 'n m'");
      n = f[0];
      m = f[1];
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than the declared m=" + std::to_string(m));
    }
    if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n) {
      throw ParseError(line_no, "edge (" + std::to_string(f[0]) + "," + std::to_string(f[1]) +
                                    ") has an id outside [0," + std::to_string(n) + ")");
    }
    if (f[0] == f[1]) throw ParseError(line_no, "self-loop (" + std::to_string(f[0]) + "," + std::to_string(f[1]) + ")");
    Edge e{static_cast<Vertex>(std::min(f[0], f[1])), static_cast<Vertex>(std::max(f[0], f[1]))};
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    }
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(line_no, "missing header 'n m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "declared m=" + std::to_string(m) + " but found " + std::to_string(edges.size()) +
                                  " edge lines");
  }
  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const InvalidInput& e) {
    throw ParseError(0, e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError(0, "JSON graph needs an integer field 'n'");
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw ParseError(0, "'edges' must be an array of [u, v] pairs");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw ParseError(0, "'edges' must be an array of [u, v] pairs");
      }
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  }
  return build_graph(doc["n"].get<int>(), edges);
}

}  // namespace mkvis
