#include "mkvis/kernel.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "mkvis/error.hpp"

namespace mkvis {

namespace {

void require_tolerance(int k) {
  if (k < 0) throw InvalidInput("tolerance k must be nonnegative, got " + std::to_string(k));
}

}  // namespace

// ---------------------------------------------------------------------------
// BFS_MkV

VisibilityKernel::VisibilityKernel(const Graph& g)
    : g_(&g),
      dist_(static_cast<std::size_t>(g.order())),
      cnt_(static_cast<std::size_t>(g.order())) {
  order_.reserve(static_cast<std::size_t>(g.order()));
}

void VisibilityKernel::run(std::span<const char> in_set, Vertex source, KernelCounters* counters) {
  const Graph& g = *g_;
  std::fill(dist_.begin(), dist_.end(), kInfinite);
  std::fill(cnt_.begin(), cnt_.end(), kInfinite);
  order_.clear();
  std::uint64_t touches = 0;

  // Phase 1: plain BFS. The discovery sequence is level-monotone and is
  // replayed below as the nondecreasing-distance processing order.
  dist_[source] = 0;
  cnt_[source] = 0;
  order_.push_back(source);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    Vertex u = order_[head];
    for (Vertex w : g.neighbors(u)) {
      ++touches;
      if (dist_[w] == kInfinite) {
        dist_[w] = dist_[u] + 1;
        order_.push_back(w);
      }
    }
  }

  // Phase 2: minimum-count relaxation along geodesic DAG edges.
  for (Vertex u : order_) {
    if (cnt_[u] == kInfinite) continue;
    for (Vertex w : g.neighbors(u)) {
      ++touches;
      if (dist_[w] != dist_[u] + 1) continue;
      int through = cnt_[u] + (in_set[w] && w != source ? 1 : 0);
      if (through < cnt_[w]) cnt_[w] = through;
    }
  }

  if (counters != nullptr) {
    ++counters->kernel_runs;
    counters->vertex_visits += 2 * order_.size();
    counters->edge_touches += touches;
  }
}

KernelResult bfs_mkv(const Graph& g, const VertexSet& s, Vertex v, KernelCounters* counters) {
  s.validate(g);
  if (!g.contains(v)) throw InvalidInput("source vertex " + std::to_string(v) + " out of range");
  VisibilityKernel kernel(g);
  auto in = s.indicator(g.order());
  kernel.run(in, v, counters);
  KernelResult out;
  out.source = v;
  out.dist.assign(kernel.dist().begin(), kernel.dist().end());
  out.cnt.assign(kernel.cnt().begin(), kernel.cnt().end());
  out.dp.reserve(s.size());
  for (Vertex q : s) out.dp.push_back(out.cnt[q]);
  return out;
}

int min_internal_count(const Graph& g, const VertexSet& x, Vertex u, Vertex w) {
  x.validate(g);
  if (!g.contains(u) || !g.contains(w)) throw InvalidInput("pair vertex out of range");
  if (u == w) return 0;
  auto result = bfs_mkv(g, x.with(u), u);
  if (!is_finite(result.dist[w])) {
    throw Disconnected("vertices " + std::to_string(u) + " and " + std::to_string(w) + " are disconnected");
  }
  return result.cnt[w] - (x.contains(w) ? 1 : 0);
}

// ---------------------------------------------------------------------------
// MkV

CheckReport mkv_check(const Graph& g, const VertexSet& s, int k, const CheckOptions& options) {
  require_tolerance(k);
  s.validate(g);
  CheckReport report;
  report.k = k;
  const std::size_t size = s.size();
  if (options.collect_pair_counts) {
    report.pair_counts = PairCounts{s.members(), std::vector<std::vector<int>>(size, std::vector<int>(size, 0))};
  }
  if (size <= 1) return report;

  VisibilityKernel kernel(g);
  auto in = s.indicator(g.order());

  // Preliminary component test: one BFS from the first member.
  kernel.run(in, s[0], &report.work);
  for (std::size_t j = 1; j < size; ++j) {
    if (!is_finite(kernel.dist()[s[j]])) {
      report.verdict = false;
      report.reason = CheckFailure::kDifferentComponents;
      report.offending_pair = OffendingPair{s[0], s[j], kInfinite};
      if (report.pair_counts) {
        for (auto& row : report.pair_counts->counts) std::fill(row.begin(), row.end(), kInfinite);
      }
      return report;
    }
  }

  for (std::size_t i = 0; i < size; ++i) {
    const Vertex v = s[i];
    if (i > 0) kernel.run(in, v, &report.work);
    auto cnt = kernel.cnt();
    for (std::size_t j = 0; j < size; ++j) {
      if (j == i) continue;
      ++report.work.pair_tests;
      const int dp = cnt[s[j]];
      if (report.pair_counts) report.pair_counts->counts[i][j] = dp - 1;
      if (dp > k + 1 && report.verdict) {
        report.verdict = false;
        report.reason = CheckFailure::kCountExceeded;
        report.offending_pair = OffendingPair{v, s[j], dp - 1};
        if (!report.pair_counts) return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Variants

std::string_view variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::kTotal:
      return "total";
    case Variant::kOuter:
      return "outer";
    case Variant::kDual:
      return "dual";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (Variant v : {Variant::kTotal, Variant::kOuter, Variant::kDual}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

ObstructionEngine::ObstructionEngine(const Graph& g, simd::Isa isa) : g_(&g), isa_(isa) {
  const int n = g.order();
  if (n > simd::kMaxDenseOrder) {
    throw LimitExceeded("dense obstruction counts support at most " + std::to_string(simd::kMaxDenseOrder) +
                        " vertices, got " + std::to_string(n));
  }
  if (!simd::isa_available(isa_)) isa_ = simd::Isa::kScalar;
  stride_ = simd::lane_stride(std::max(n, 1));
  dist_.assign(static_cast<std::size_t>(n) * stride_, simd::kUnreached);
  for (Vertex v = 0; v < n; ++v) {
    auto d = bfs_distances(g, v);
    for (Vertex w = 0; w < n; ++w) {
      if (is_finite(d[w])) {
        dist_[static_cast<std::size_t>(w) * stride_ + v] = static_cast<std::uint8_t>(d[w]);
        max_level_ = std::max(max_level_, d[w]);
      }
    }
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  targets_.reserve(static_cast<std::size_t>(2 * g.size()));
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    targets_.insert(targets_.end(), nb.begin(), nb.end());
    offsets_[v + 1] = static_cast<std::uint32_t>(targets_.size());
  }
}

ObstructionEngine::Matrix ObstructionEngine::compute(const VertexSet& x) const {
  const Graph& g = *g_;
  x.validate(g);
  std::vector<std::uint8_t> weight(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x) weight[v] = 1;

  simd::LevelInput in;
  in.n = g.order();
  in.stride = stride_;
  in.max_level = max_level_;
  in.dist = dist_.data();
  in.offsets = offsets_.data();
  in.targets = targets_.data();
  in.weight = weight.data();

  Matrix m;
  m.n_ = g.order();
  m.stride_ = stride_;
  m.data_.resize(static_cast<std::size_t>(g.order()) * stride_);
  simd::obstruction_counts(in, m.data_.data(), isa_);
  return m;
}

namespace {

using CountFn = std::function<int(Vertex, Vertex)>;

CheckReport evaluate_variant(int n, const VertexSet& x, int k, Variant variant, const CheckOptions& options,
                             const CountFn& count) {
  CheckReport report;
  report.k = k;
  auto in = x.indicator(n);
  if (options.collect_pair_counts) {
    PairCounts pc{VertexSet::range(n).members(), std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = 0; w < n; ++w) pc.counts[u][w] = count(u, w);
    }
    report.pair_counts = std::move(pc);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      bool required = false;
      switch (variant) {
        case Variant::kTotal:
          required = true;
          break;
        case Variant::kOuter:
          required = in[u] || in[w];
          break;
        case Variant::kDual:
          required = in[u] == in[w];
          break;
      }
      if (!required) continue;
      ++report.work.pair_tests;
      int c = report.pair_counts ? report.pair_counts->counts[u][w] : count(u, w);
      if (c > k) {
        report.verdict = false;
        report.reason = CheckFailure::kCountExceeded;
        report.offending_pair = OffendingPair{u, w, c};
        return report;
      }
    }
  }
  return report;
}

}  // namespace

CheckReport check_variant(const ObstructionEngine& engine, const VertexSet& x, int k, Variant variant,
                          const CheckOptions& options) {
  require_tolerance(k);
  const Graph& g = engine.graph();
  x.validate(g);
  require_connected(g, "check_variant");
  auto matrix = engine.compute(x);
  return evaluate_variant(g.order(), x, k, variant, options, [&](Vertex u, Vertex w) { return matrix(u, w); });
}

CheckReport check_variant(const Graph& g, const VertexSet& x, int k, Variant variant, const CheckOptions& options) {
  require_tolerance(k);
  x.validate(g);
  require_connected(g, "check_variant");
  if (g.order() <= simd::kMaxDenseOrder) {
    return check_variant(ObstructionEngine(g), x, k, variant, options);
  }
  // Row-at-a-time fallback through BFS_MkV for graphs beyond the byte layout.
  const int n = g.order();
  VisibilityKernel kernel(g);
  auto in = x.indicator(n);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    kernel.run(in, u);
    rows[u].resize(static_cast<std::size_t>(n));
    for (Vertex w = 0; w < n; ++w) rows[u][w] = w == u ? 0 : kernel.cnt()[w] - (in[w] ? 1 : 0);
  }
  return evaluate_variant(n, x, k, variant, options, [&](Vertex u, Vertex w) { return rows[u][w]; });
}

// ---------------------------------------------------------------------------
// Incremental extension

ExtensionChecker::ExtensionChecker(const Graph& g, int k)
    : g_(&g), k_(k), dist_(g), kernel_(g), in_(static_cast<std::size_t>(g.order()), 0) {
  require_tolerance(k);
}

bool ExtensionChecker::can_extend(const State& state, Vertex c) {
  const auto& members = state.members;
  if (members.empty()) return true;
  for (Vertex v : members) in_[v] = 1;
  in_[c] = 1;
  bool ok = true;

  // New pairs (c, q).
  kernel_.run(in_, c, &counters_);
  for (Vertex q : members) {
    ++counters_.pair_tests;
    if (kernel_.cnt()[q] > k_ + 1) {
      ok = false;
      break;
    }
  }

  // Old pairs already at k that c can sit between.
  for (std::size_t i = 0; ok && i < members.size(); ++i) {
    const Vertex a = members[i];
    bool rerun = false;
    for (std::size_t j = 0; j < members.size() && !rerun; ++j) {
      rerun = j != i && state.counts[i][j] == k_ && dist_.between(a, c, members[j]);
    }
    if (!rerun) continue;
    kernel_.run(in_, a, &counters_);
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j == i) continue;
      ++counters_.pair_tests;
      if (kernel_.cnt()[members[j]] > k_ + 1) {
        ok = false;
        break;
      }
    }
  }

  for (Vertex v : members) in_[v] = 0;
  in_[c] = 0;
  return ok;
}

ExtensionChecker::State ExtensionChecker::extend(const State& state, Vertex v) {
  State next;
  next.members = state.members;
  next.members.push_back(v);
  const std::size_t size = next.members.size();
  next.counts.assign(size, std::vector<int>(size, 0));
  for (Vertex u : next.members) in_[u] = 1;
  for (std::size_t i = 0; i < size; ++i) {
    kernel_.run(in_, next.members[i], &counters_);
    for (std::size_t j = 0; j < size; ++j) {
      if (j != i) next.counts[i][j] = kernel_.cnt()[next.members[j]] - 1;
    }
  }
  for (Vertex u : next.members) in_[u] = 0;
  return next;
}

}  // namespace mkvis
