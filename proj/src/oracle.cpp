#include "mkvis/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mkvis/error.hpp"

namespace mkvis {

namespace {

struct GeodesicWalk {
  const Graph& g;
  const std::vector<char>& in;
  const std::vector<int>& from_u;
  const std::vector<int>& to_w;
  Vertex target;
  std::uint64_t cap;
  std::uint64_t listed = 0;
  int best = kInfinite;

  // `inside` counts x-vertices strictly between u and the current vertex.
  void walk(Vertex at, int inside) {
    if (at == target) {
      if (++listed > cap) throw LimitExceeded("geodesic enumeration exceeded cap " + std::to_string(cap));
      best = std::min(best, inside);
      return;
    }
    for (Vertex next : g.neighbors(at)) {
      if (from_u[next] != from_u[at] + 1 || to_w[next] != to_w[at] - 1) continue;
      int add = (next != target && in[next]) ? 1 : 0;
      walk(next, inside + add);
    }
  }
};

}  // namespace

int oracle_min_internal_count(const Graph& g, const VertexSet& x, Vertex u, Vertex w, std::uint64_t cap) {
  x.validate(g);
  if (!g.contains(u) || !g.contains(w)) throw InvalidInput("pair vertex out of range");
  if (u == w) return 0;
  auto from_u = bfs_distances(g, u);
  if (!is_finite(from_u[w])) {
    throw Disconnected("vertices " + std::to_string(u) + " and " + std::to_string(w) + " are disconnected");
  }
  auto to_w = bfs_distances(g, w);
  auto in = x.indicator(g.order());
  GeodesicWalk walk{g, in, from_u, to_w, w, cap};
  walk.walk(u, 0);
  return walk.best;
}

bool oracle_is_mutual_k_visible(const Graph& g, const VertexSet& s, int k, std::uint64_t cap) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      try {
        if (oracle_min_internal_count(g, s, s[i], s[j], cap) > k) return false;
      } catch (const Disconnected&) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace mkvis
