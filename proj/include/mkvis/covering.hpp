#pragma once

#include <optional>
#include <vector>

#include "mkvis/graph.hpp"
#include "mkvis/solvers.hpp"

namespace mkvis {

struct Partition {
  std::vector<VertexSet> parts;

  std::size_t size() const noexcept { return parts.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Parts are nonempty, pairwise disjoint, cover V and are mutual k-visible.
bool is_valid_cover(const Graph& g, const Partition& p, int k);

enum class CoverCertificate {
  kMuLower,     // value equals ceil(n / mu_k)
  kExhaustive,  // every smaller part count was refuted by the search
};

struct CoverResult {
  int value = 0;
  Partition partition;
  int lower_bound_used = 0;
  CoverCertificate certificate = CoverCertificate::kMuLower;
  std::uint64_t nodes_explored = 0;
};

// Exact tau_k. Part counts are tried from ceil(n / mu_k) upward; vertices are
// assigned in descending degree order, a vertex opening part j only when
// parts 0..j-1 are in use. Throws LimitExceeded above limits.tau_max_n.
CoverResult tau_k(const Graph& g, int k, const SolveLimits& limits = {});

struct TauBounds {
  int n = 0;
  int k = 0;
  int mu = 0;
  int lower = 0;        // ceil(n / mu)
  int chunk_upper = 0;  // ceil(n / (k + 2))
  int mu_upper = 0;     // 1 + ceil((n - mu) / (k + 2))

  int upper() const noexcept { return chunk_upper < mu_upper ? chunk_upper : mu_upper; }
};

// mu_value, when given, must be the exact mu_k; otherwise it is computed.
TauBounds tau_bounds(const Graph& g, int k, std::optional<int> mu_value = std::nullopt,
                     const SolveLimits& limits = {});

// First-fit in descending degree order.
Partition greedy_cover(const Graph& g, int k);

// Residue classes modulo t = ceil(n / (2k + 3)) on C_n. Requires n >= 3 and
// 2k + 3 < n.
Partition cycle_cover_partition(int n, int k);

}  // namespace mkvis
