#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace mkvis {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Distance sentinel for unreachable vertices; never used in arithmetic.
inline constexpr int kInfinite = std::numeric_limits<int>::max();

inline bool is_finite(int d) noexcept { return d != kInfinite; }

// Undirected simple graph on vertices 0..n-1, stored as sorted adjacency
// lists in CSR form. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidInput naming the offending pair on out-of-range ids,
  // self-loops and duplicate edges.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  int size() const noexcept { return static_cast<int>(targets_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(Vertex u, Vertex v) const noexcept;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  int max_degree() const noexcept;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> targets_;
};

Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Sorted, duplicate-free subset of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  // Sorts; throws InvalidInput on duplicates or negative ids.
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet from_mask(std::uint64_t mask);
  static VertexSet range(int n);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const noexcept { return members_[i]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  VertexSet with(Vertex v) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet complement(int n) const;

  // 0/1 membership over [0, n); requires every member < n.
  std::vector<char> indicator(int n) const;
  // Requires every member < 64.
  std::uint64_t mask() const;

  // Throws InvalidInput if some member is not a vertex of g.
  void validate(const class Graph& g) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Breadth-first distances from v; kInfinite for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex v);

// Row-major n x n distance matrix.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int operator()(Vertex u, Vertex v) const noexcept { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  int order() const noexcept { return n_; }
  // True iff w lies on some shortest (u, v)-path, endpoints included.
  bool between(Vertex u, Vertex w, Vertex v) const noexcept;

 private:
  int n_;
  std::vector<int> data_;
};

bool is_connected(const Graph& g);
// Throws Disconnected unless g has at least one vertex and one component.
void require_connected(const Graph& g, const char* operation);

struct MetricSummary {
  int diameter = kInfinite;  // kInfinite when disconnected or empty
  int girth = kInfinite;     // kInfinite when acyclic
  int max_degree = 0;
};

MetricSummary metric_summary(const Graph& g);

// Smallest convex superset of s: fixpoint of the geodesic interval operator.
VertexSet convex_hull(const Graph& g, const VertexSet& s);

// True iff d(p[i], p[j]) == |i - j| for every index pair. Throws
// InvalidInput when consecutive vertices are not adjacent.
bool is_isometric_path(const Graph& g, std::span<const Vertex> path);

// A shortest path between two vertices at maximum distance. Requires a
// connected graph.
std::vector<Vertex> diametral_geodesic(const Graph& g);

// Subgraph induced by s, relabelled so that s[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace mkvis
