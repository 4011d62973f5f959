#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mkvis/graph.hpp"
#include "mkvis/simd/obstruction.hpp"

namespace mkvis {

// Work performed by kernel runs. Every adjacency entry read counts as one
// edge touch, so one run on a connected graph touches at most 4m entries.
struct KernelCounters {
  std::uint64_t kernel_runs = 0;
  std::uint64_t vertex_visits = 0;
  std::uint64_t edge_touches = 0;
  std::uint64_t pair_tests = 0;

  KernelCounters& operator+=(const KernelCounters& o) noexcept {
    kernel_runs += o.kernel_runs;
    vertex_visits += o.vertex_visits;
    edge_touches += o.edge_touches;
    pair_tests += o.pair_tests;
    return *this;
  }
};

// Output of one minimum-obstruction BFS from `source`.
//
// cnt[w] is the minimum, over shortest (source, w)-paths, of the number of
// vertices of S \ {source} on the path, the target w included. dp holds cnt
// restricted to the members of S, in the order of S.
struct KernelResult {
  Vertex source = 0;
  std::vector<int> dist;
  std::vector<int> cnt;
  std::vector<int> dp;
};

// Reusable buffers for repeated BFS_MkV runs over one graph.
class VisibilityKernel {
 public:
  explicit VisibilityKernel(const Graph& g);

  // in_set has one 0/1 entry per vertex. Results stay valid until the next run.
  void run(std::span<const char> in_set, Vertex source, KernelCounters* counters = nullptr);

  std::span<const int> dist() const noexcept { return dist_; }
  std::span<const int> cnt() const noexcept { return cnt_; }
  const Graph& graph() const noexcept { return *g_; }

 private:
  const Graph* g_;
  std::vector<int> dist_;
  std::vector<int> cnt_;
  std::vector<Vertex> order_;
};

KernelResult bfs_mkv(const Graph& g, const VertexSet& s, Vertex v, KernelCounters* counters = nullptr);

// Minimum number of x-vertices strictly inside a shortest (u, w)-path.
// Returns 0 for u == w; throws Disconnected when w is unreachable from u.
int min_internal_count(const Graph& g, const VertexSet& x, Vertex u, Vertex w);

enum class CheckFailure { kNone, kCountExceeded, kDifferentComponents };

struct OffendingPair {
  Vertex u = 0;
  Vertex v = 0;
  int count = 0;  // kInfinite when u and v lie in different components

  friend bool operator==(const OffendingPair&, const OffendingPair&) = default;
};

// Internal counts between every pair of `vertices`; counts[i][j] refers to
// (vertices[i], vertices[j]) and is kInfinite across components.
struct PairCounts {
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> counts;
};

struct CheckReport {
  bool verdict = true;
  int k = 0;
  CheckFailure reason = CheckFailure::kNone;
  std::optional<OffendingPair> offending_pair;
  std::optional<PairCounts> pair_counts;
  KernelCounters work;
};

struct CheckOptions {
  bool collect_pair_counts = false;
};

// Mutual k-visibility test: one BFS_MkV per member of s, each target q
// accepted iff dp[q] <= k + 1 (the +1 is q itself).
CheckReport mkv_check(const Graph& g, const VertexSet& s, int k, const CheckOptions& options = {});

enum class Variant { kTotal, kOuter, kDual };

std::string_view variant_name(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

// Dense all-pairs internal counts for obstruction set x, computed level by
// level with the selected SIMD kernel. Reuses the graph's byte distance
// matrix across calls, which makes it the engine for repeated variant checks.
class ObstructionEngine {
 public:
  explicit ObstructionEngine(const Graph& g, simd::Isa isa = simd::best_isa());

  // counts(u, w) = min internal x-count over shortest (u, w)-paths; 0 on the
  // diagonal; kInfinite across components.
  class Matrix {
   public:
    int operator()(Vertex u, Vertex w) const noexcept {
      std::uint8_t c = data_[static_cast<std::size_t>(w) * stride_ + u];
      return c == simd::kUnreached ? kInfinite : c;
    }
    int order() const noexcept { return n_; }

   private:
    friend class ObstructionEngine;
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint8_t> data_;
  };

  Matrix compute(const VertexSet& x) const;
  simd::Isa isa() const noexcept { return isa_; }
  const Graph& graph() const noexcept { return *g_; }

 private:
  const Graph* g_;
  simd::Isa isa_;
  int stride_ = 0;
  int max_level_ = 0;
  std::vector<std::uint8_t> dist_;  // dist_[w * stride_ + v] = d(v, w)
  std::vector<std::uint32_t> offsets_;
  std::vector<std::int32_t> targets_;
};

// Total, outer and dual variants; every pair test excludes both endpoints.
// Throws Disconnected on a disconnected graph.
CheckReport check_variant(const Graph& g, const VertexSet& x, int k, Variant variant,
                          const CheckOptions& options = {});
CheckReport check_variant(const ObstructionEngine& engine, const VertexSet& x, int k, Variant variant,
                          const CheckOptions& options = {});

// Incremental membership for searches over the hereditary family of mutual
// k-visible sets. A State always holds a mutual k-visible set together with
// its internal pair counts.
class ExtensionChecker {
 public:
  ExtensionChecker(const Graph& g, int k);

  struct State {
    std::vector<Vertex> members;
    std::vector<std::vector<int>> counts;  // by member position
  };

  State empty_state() const { return {}; }

  // True iff state.members + {c} is mutual k-visible. Adding c only raises
  // the count of an old pair (a, b) if c lies on an (a, b)-geodesic, and then
  // by at most one, so only sources of pairs already at k are re-run.
  bool can_extend(const State& state, Vertex c);

  // Requires can_extend(state, v). Recomputes every pair count.
  State extend(const State& state, Vertex v);

  const KernelCounters& counters() const noexcept { return counters_; }
  int k() const noexcept { return k_; }
  const DistanceMatrix& distances() const noexcept { return dist_; }

 private:
  const Graph* g_;
  int k_;
  DistanceMatrix dist_;
  VisibilityKernel kernel_;
  std::vector<char> in_;
  KernelCounters counters_;
};

}  // namespace mkvis
