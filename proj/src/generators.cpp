#include "mkvis/generators.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mkvis/error.hpp"

namespace mkvis {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph path_graph(int n) {
  require(n >= 1, "path_graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete_graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite needs m, n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = m; v < m + n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(m + n, edges);
}

Graph random_connected(int n, double edge_probability, std::uint64_t seed) {
  require(n >= 1, "random_connected needs n >= 1");
  require(edge_probability >= 0.0 && edge_probability <= 1.0, "edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[bounded(rng, i)]);

  std::vector<std::vector<char>> present(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < order.size(); ++i) {
    Vertex u = order[i];
    Vertex v = order[bounded(rng, i)];
    present[u][v] = present[v][u] = 1;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      double draw = unit(rng);
      if (!present[u][v] && draw < edge_probability) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

Graph random_block_graph(int block_count, int max_block_size, std::uint64_t seed) {
  require(block_count >= 1, "random_block_graph needs at least one block");
  require(max_block_size >= 2, "random_block_graph needs max block size >= 2");
  std::mt19937_64 rng(seed);
  auto block_size = [&] { return 2 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_block_size - 1))); };

  std::vector<Edge> edges;
  int n = 0;
  auto add_clique = [&](std::vector<Vertex> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
    }
  };

  std::vector<Vertex> first;
  for (int i = block_size(); i > 0; --i) first.push_back(n++);
  add_clique(first);
  for (int b = 1; b < block_count; ++b) {
    std::vector<Vertex> members{static_cast<Vertex>(bounded(rng, static_cast<std::uint64_t>(n)))};
    for (int i = block_size() - 1; i > 0; --i) members.push_back(n++);
    add_clique(members);
  }
  return build_graph(n, edges);
}

}  // namespace mkvis
