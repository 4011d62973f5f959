#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mkvis/graph.hpp"
#include "mkvis/kernel.hpp"

namespace mkvis {

// Exact-solve size limits. Instances above a limit are refused with
// LimitExceeded; nothing is approximated.
struct SolveLimits {
  int mu_max_n = 24;
  int variant_max_n = 18;
  int poly_max_n = 18;
  int gp_max_n = 20;
  int tau_max_n = 16;
  int block_max_nodes = 48;
};

struct SolveResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
};

// Maximum mutual k-visible set by branch-and-bound over the hereditary
// family: vertices in descending degree order, candidates filtered to those
// that keep the current set feasible, cut when |current| + |candidates|
// cannot beat the incumbent or when the incumbent meets the diameter bound.
SolveResult mu_k(const Graph& g, int k, const SolveLimits& limits = {});

// Largest set passing check_variant, by enumerating subsets from the largest
// size down. No heredity-based pruning: the dual variant is not hereditary.
SolveResult mu_k_variant(const Graph& g, int k, Variant variant, const SolveLimits& limits = {});

// No member lies on any geodesic between two other members.
bool is_general_position(const Graph& g, const VertexSet& s);
SolveResult gp_number(const Graph& g, const SolveLimits& limits = {});

struct BoundsRecord {
  int n = 0;
  int k = 0;
  int diameter = 0;
  std::optional<int> girth;        // empty when acyclic
  int diameter_bound = 0;          // n - d + k + 1
  std::optional<int> girth_bound;  // n - g + 2k + 3
  int trivial_bound = 0;           // n
  std::optional<int> gp_lower;     // omitted above the gp size limit
  int degree_lower = 0;            // max degree, plus one when k >= 1
  int isometric_bound = 0;         // n - l + k + 1
  std::vector<Vertex> isometric_path;

  int min_upper() const noexcept;
  int max_lower() const noexcept;
};

// Without a supplied path the isometric bound uses a diametral geodesic and
// coincides with the diameter bound. Throws InvalidInput if the supplied
// path is not isometric.
BoundsRecord bounds(const Graph& g, int k, std::optional<std::span<const Vertex>> isometric_path = std::nullopt,
                    const SolveLimits& limits = {});

// True when an exact value exceeds the girth bound. The solvers never prune
// with that bound so that such instances stay observable.
bool exceeds_girth_bound(const BoundsRecord& b, int mu) noexcept;

// Coefficient i counts the mutual k-visible sets of cardinality i, up to the
// degree.
struct Polynomial {
  std::vector<std::uint64_t> coefficients;

  int degree() const noexcept;
  std::uint64_t total() const noexcept;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// Depth-first walk of the down-closed family; a failing set is never
// extended.
Polynomial visibility_polynomial(const Graph& g, int k, const SolveLimits& limits = {});

// On C_n: a run of k+2 consecutive vertices from 0, a gap of floor(r/2),
// a run of k+1, and a gap of ceil(r/2) closing the cycle, r = n - (2k+3).
// Requires n >= 3 and 2k + 3 <= n.
VertexSet cycle_extremal_set(int n, int k);

// Sum of mu_k over the convex hulls of the parts; an upper bound on mu_k(g).
// Parts must be nonempty and cover V.
int hull_cover_bound(const Graph& g, std::span<const VertexSet> parts, int k, const SolveLimits& limits = {});

}  // namespace mkvis
