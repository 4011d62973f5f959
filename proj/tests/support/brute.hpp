#pragma once

// Brute-force references used by the tests. Deliberately independent of the
// library algorithms: distances by plain BFS over an adjacency matrix and
// visibility by enumerating every geodesic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "mkvis/graph.hpp"

namespace brute {

using Matrix = std::vector<std::vector<int>>;
inline constexpr int kFar = std::numeric_limits<int>::max();

inline Matrix adjacency(const mkvis::Graph& g) {
  const int n = g.order();
  Matrix a(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline Matrix distances(const mkvis::Graph& g) {
  const int n = g.order();
  Matrix a = adjacency(g);
  Matrix d(n, std::vector<int>(n, kFar));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::vector<int> frontier{s};
    for (int level = 1; !frontier.empty(); ++level) {
      std::vector<int> next;
      for (int u : frontier) {
        for (int v = 0; v < n; ++v) {
          if (a[u][v] && d[s][v] == kFar) {
            d[s][v] = level;
            next.push_back(v);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return d;
}

// Minimum number of x-members strictly inside a shortest (u, w)-path, by
// walking every geodesic. kFar when w is unreachable.
inline int min_internal(const mkvis::Graph& g, const Matrix& d, const std::vector<char>& in_x, int u, int w) {
  if (d[u][w] == kFar) return kFar;
  if (u == w) return 0;
  int best = kFar;
  std::function<void(int, int)> walk = [&](int v, int inside) {
    if (v == w) {
      best = std::min(best, inside);
      return;
    }
    for (int next : g.neighbors(v)) {
      if (d[u][next] == d[u][v] + 1 && d[next][w] == d[v][w] - 1) {
        walk(next, inside + (next != w && in_x[next] ? 1 : 0));
      }
    }
  };
  walk(u, 0);
  return best;
}

inline std::vector<char> indicator(int n, const std::vector<int>& members) {
  std::vector<char> in(n, 0);
  for (int v : members) in[v] = 1;
  return in;
}

inline bool mutually_visible(const mkvis::Graph& g, const Matrix& d, const std::vector<int>& s, int k) {
  auto in = indicator(g.order(), s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      int c = min_internal(g, d, in, s[i], s[j]);
      if (c == kFar || c > k) return false;
    }
  }
  return true;
}

inline std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

// Every subset by mask; counts[i] = number of mutual k-visible sets of size i.
inline std::vector<std::uint64_t> visible_counts(const mkvis::Graph& g, int k) {
  const int n = g.order();
  Matrix d = distances(g);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto s = members(mask);
    if (mutually_visible(g, d, s, k)) ++counts[s.size()];
  }
  return counts;
}

inline int mu(const mkvis::Graph& g, int k) {
  auto counts = visible_counts(g, k);
  int top = 0;
  for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
    if (counts[i]) top = i;
  }
  return top;
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace brute
