#include "mkvis/covering.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mkvis/error.hpp"
#include "mkvis/kernel.hpp"

namespace mkvis {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Chunks of k + 2 vertices, optionally after a known mutual k-visible set.
Partition chunk_cover(int n, int k, const VertexSet& first) {
  Partition p;
  if (!first.empty()) p.parts.push_back(first);
  std::vector<Vertex> chunk;
  for (Vertex v = 0; v < n; ++v) {
    if (first.contains(v)) continue;
    chunk.push_back(v);
    if (static_cast<int>(chunk.size()) == k + 2) {
      p.parts.emplace_back(std::move(chunk));
      chunk.clear();
    }
  }
  if (!chunk.empty()) p.parts.emplace_back(std::move(chunk));
  return p;
}

class CoverSearch {
 public:
  CoverSearch(const Graph& g, int k, int mu) : g_(g), k_(k), mu_(mu), order_(degree_order(g)) {}

  bool solve(int t) {
    parts_.assign(static_cast<std::size_t>(t), 0);
    sizes_.assign(static_cast<std::size_t>(t), 0);
    used_ = 0;
    return assign(0);
  }

  Partition partition() const {
    Partition p;
    for (int j = 0; j < used_; ++j) p.parts.push_back(VertexSet::from_mask(parts_[j]));
    return p;
  }

  std::uint64_t nodes_explored() const noexcept { return explored_; }

 private:
  bool feasible(std::uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    bool ok = mkv_check(g_, VertexSet::from_mask(mask), k_).verdict;
    memo_.emplace(mask, ok);
    return ok;
  }

  bool assign(std::size_t i) {
    ++explored_;
    const int remaining = static_cast<int>(order_.size() - i);
    if (remaining == 0) return true;
    const int t = static_cast<int>(parts_.size());
    int room = (t - used_) * mu_;
    for (int j = 0; j < used_; ++j) room += mu_ - sizes_[j];
    if (room < remaining) return false;

    const std::uint64_t bit = std::uint64_t{1} << order_[i];
    for (int j = 0; j < used_; ++j) {
      if (sizes_[j] == mu_ || !feasible(parts_[j] | bit)) continue;
      parts_[j] |= bit;
      ++sizes_[j];
      if (assign(i + 1)) return true;
      parts_[j] &= ~bit;
      --sizes_[j];
    }
    if (used_ < t) {
      parts_[used_] = bit;
      sizes_[used_] = 1;
      ++used_;
      if (assign(i + 1)) return true;
      --used_;
      parts_[used_] = 0;
      sizes_[used_] = 0;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int mu_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> parts_;
  std::vector<int> sizes_;
  int used_ = 0;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::uint64_t explored_ = 0;
};

}  // namespace

bool is_valid_cover(const Graph& g, const Partition& p, int k) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  int covered = 0;
  for (const auto& part : p.parts) {
    if (part.empty()) return false;
    for (Vertex v : part) {
      if (!g.contains(v) || seen[v]) return false;
      seen[v] = 1;
      ++covered;
    }
    if (!mkv_check(g, part, k).verdict) return false;
  }
  return covered == g.order();
}

TauBounds tau_bounds(const Graph& g, int k, std::optional<int> mu_value, const SolveLimits& limits) {
  if (k < 0) throw InvalidInput("tolerance k must be nonnegative");
  TauBounds b;
  b.n = g.order();
  b.k = k;
  b.mu = mu_value ? *mu_value : mu_k(g, k, limits).value;
  if (b.mu < 1 || b.mu > b.n) throw InvalidInput("mu value " + std::to_string(b.mu) + " outside [1, n]");
  b.lower = ceil_div(b.n, b.mu);
  b.chunk_upper = ceil_div(b.n, k + 2);
  b.mu_upper = 1 + ceil_div(b.n - b.mu, k + 2);
  return b;
}

CoverResult tau_k(const Graph& g, int k, const SolveLimits& limits) {
  if (k < 0) throw InvalidInput("tolerance k must be nonnegative");
  require_connected(g, "tau_k");
  const int n = g.order();
  if (n > limits.tau_max_n || n > 64) {
    throw LimitExceeded("tau_k: n = " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(std::min(limits.tau_max_n, 64)));
  }
  auto mu = mu_k(g, k, limits);
  auto b = tau_bounds(g, k, mu.value, limits);

  CoverResult out;
  out.partition = greedy_cover(g, k);
  for (auto candidate : {chunk_cover(n, k, {}), chunk_cover(n, k, mu.witness)}) {
    if (candidate.size() < out.partition.size()) out.partition = std::move(candidate);
  }
  out.lower_bound_used = std::max(b.lower, 1);
  CoverSearch search(g, k, mu.value);
  for (int t = out.lower_bound_used; t < static_cast<int>(out.partition.size()); ++t) {
    if (search.solve(t)) {
      out.partition = search.partition();
      break;
    }
  }
  out.value = static_cast<int>(out.partition.size());
  out.certificate = out.value == out.lower_bound_used ? CoverCertificate::kMuLower : CoverCertificate::kExhaustive;
  out.nodes_explored = search.nodes_explored();
  return out;
}

Partition greedy_cover(const Graph& g, int k) {
  if (k < 0) throw InvalidInput("tolerance k must be nonnegative");
  require_connected(g, "greedy_cover");
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v : degree_order(g)) {
    bool placed = false;
    for (auto& part : parts) {
      std::vector<Vertex> trial = part;
      trial.push_back(v);
      if (mkv_check(g, VertexSet(trial), k).verdict) {
        part = std::move(trial);
        placed = true;
        break;
      }
    }
    if (!placed) parts.push_back({v});
  }
  Partition p;
  for (auto& part : parts) p.parts.emplace_back(std::move(part));
  return p;
}

Partition cycle_cover_partition(int n, int k) {
  if (n < 3) throw InvalidInput("cycle_cover_partition: n must be at least 3");
  if (k < 0) throw InvalidInput("tolerance k must be nonnegative");
  if (2 * k + 3 >= n) {
    throw InvalidInput("cycle_cover_partition: requires 2k+3 < n, got n = " + std::to_string(n) +
                       ", k = " + std::to_string(k));
  }
  const int t = ceil_div(n, 2 * k + 3);
  std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(t));
  for (Vertex i = 0; i < n; ++i) parts[i % t].push_back(i);
  Partition p;
  for (auto& part : parts) p.parts.emplace_back(std::move(part));
  return p;
}

}  // namespace mkvis
