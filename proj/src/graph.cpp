#include "mkvis/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mkvis/error.hpp"

namespace mkvis {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidInput("negative vertex count " + std::to_string(n));
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidInput("edge " + pair_text(u, v) + " has an id outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw InvalidInput("self-loop " + pair_text(u, v));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.reserve(static_cast<std::size_t>(n) + 1);
  g.offsets_.push_back(0);
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) throw InvalidInput("duplicate edge " + pair_text(std::min(v, *dup), std::max(v, *dup)));
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(static_cast<std::uint32_t>(g.targets_.size()));
  }
  return g;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw InvalidInput("negative vertex id " + std::to_string(members_.front()));
  }
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) throw InvalidInput("duplicate vertex " + std::to_string(*dup) + " in set");
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  while (mask != 0) {
    s.members_.push_back(static_cast<Vertex>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return s;
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.members_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexSet VertexSet::with(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
  if (it == s.members_.end() || *it != v) s.members_.insert(it, v);
  return s;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  VertexSet s;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(s.members_));
  return s;
}

VertexSet VertexSet::complement(int n) const {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v) {
    if (!contains(v)) s.members_.push_back(v);
  }
  return s;
}

std::vector<char> VertexSet::indicator(int n) const {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : members_) in[v] = 1;
  return in;
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : members_) m |= std::uint64_t{1} << v;
  return m;
}

void VertexSet::validate(const Graph& g) const {
  if (!members_.empty() && members_.back() >= g.order()) {
    throw InvalidInput("vertex " + std::to_string(members_.back()) + " is not in a graph of order " +
                       std::to_string(g.order()));
  }
}

// ---------------------------------------------------------------------------
// Metrics

std::vector<int> bfs_distances(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InvalidInput("source vertex " + std::to_string(v) + " out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kInfinite);
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  dist[v] = 0;
  queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfinite) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  data_.resize(static_cast<std::size_t>(n_) * n_);
  for (Vertex v = 0; v < n_; ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(v) * n_);
  }
}

bool DistanceMatrix::between(Vertex u, Vertex w, Vertex v) const noexcept {
  int duv = (*this)(u, v);
  int duw = (*this)(u, w);
  int dwv = (*this)(w, v);
  if (!is_finite(duv) || !is_finite(duw) || !is_finite(dwv)) return false;
  return duw + dwv == duv;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfinite; });
}

void require_connected(const Graph& g, const char* operation) {
  if (!is_connected(g)) throw Disconnected(std::string(operation) + " requires a connected graph");
}

MetricSummary metric_summary(const Graph& g) {
  MetricSummary out;
  out.max_degree = g.max_degree();
  const int n = g.order();
  int diameter = n > 0 ? 0 : kInfinite;
  int girth = kInfinite;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInfinite);
    queue.clear();
    dist[root] = 0;
    parent[root] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kInfinite) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          // Non-tree edge: closed walk through root containing a cycle no
          // longer than this. Exact once minimized over every root.
          girth = std::min(girth, dist[u] + dist[w] + 1);
        }
      }
    }
    if (diameter != kInfinite) {
      if (queue.size() != static_cast<std::size_t>(n)) {
        diameter = kInfinite;
      } else {
        diameter = std::max(diameter, dist[queue.back()]);
      }
    }
  }
  out.diameter = diameter;
  out.girth = girth;
  return out;
}

VertexSet convex_hull(const Graph& g, const VertexSet& s) {
  s.validate(g);
  if (s.empty()) throw InvalidInput("convex hull of an empty set");
  require_connected(g, "convex_hull");
  DistanceMatrix dm(g);
  const int n = g.order();
  std::vector<char> in = s.indicator(n);
  std::vector<Vertex> members = s.members();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vertex> added;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        for (Vertex w = 0; w < n; ++w) {
          if (!in[w] && dm.between(members[i], w, members[j])) {
            in[w] = 1;
            added.push_back(w);
          }
        }
      }
    }
    if (!added.empty()) {
      grew = true;
      members.insert(members.end(), added.begin(), added.end());
    }
  }
  return VertexSet(std::move(members));
}

bool is_isometric_path(const Graph& g, std::span<const Vertex> path) {
  for (Vertex v : path) {
    if (!g.contains(v)) throw InvalidInput("path vertex " + std::to_string(v) + " out of range");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.adjacent(path[i], path[i + 1])) {
      throw InvalidInput("path step " + pair_text(path[i], path[i + 1]) + " is not an edge");
    }
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    auto dist = bfs_distances(g, path[i]);
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (dist[path[j]] != static_cast<int>(j - i)) return false;
    }
  }
  return true;
}

std::vector<Vertex> diametral_geodesic(const Graph& g) {
  require_connected(g, "diametral_geodesic");
  Vertex best_u = 0;
  Vertex best_v = 0;
  int best = -1;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] > best) {
        best = dist[v];
        best_u = u;
        best_v = v;
      }
    }
  }
  // Walk back from best_v towards best_u along decreasing distance.
  auto from_u = bfs_distances(g, best_u);
  std::vector<Vertex> path{best_v};
  Vertex cur = best_v;
  while (cur != best_u) {
    for (Vertex w : g.neighbors(cur)) {
      if (from_u[w] == from_u[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.validate(g);
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) relabel[s[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
  }
  return Graph::from_edges(static_cast<int>(s.size()), edges);
}

}  // namespace mkvis
