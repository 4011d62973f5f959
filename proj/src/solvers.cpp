#include "mkvis/solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mkvis/error.hpp"

namespace mkvis {

namespace {

void require_tolerance(int k) {
  if (k < 0) throw InvalidInput("tolerance k must be nonnegative, got " + std::to_string(k));
}

void require_order(const Graph& g, int limit, const char* what) {
  const int cap = std::min(limit, 64);
  if (g.order() > cap) {
    throw LimitExceeded(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds the exact-solve limit " +
                        std::to_string(cap));
  }
}

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

class MuSearch {
 public:
  MuSearch(const Graph& g, int k, int upper) : checker_(g, k), upper_(upper) {}

  void seed(const VertexSet& incumbent) { best_ = incumbent.members(); }

  void run(const std::vector<Vertex>& order) { search(checker_.empty_state(), order); }

  const std::vector<Vertex>& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void search(const ExtensionChecker::State& state, const std::vector<Vertex>& cands) {
    ++nodes_;
    if (state.members.size() > best_.size()) best_ = state.members;
    if (static_cast<int>(best_.size()) >= upper_) {
      done_ = true;
      return;
    }
    for (std::size_t i = 0; i < cands.size() && !done_; ++i) {
      if (state.members.size() + (cands.size() - i) <= best_.size()) return;
      auto next = checker_.extend(state, cands[i]);
      std::vector<Vertex> next_cands;
      next_cands.reserve(cands.size() - i - 1);
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (checker_.can_extend(next, cands[j])) next_cands.push_back(cands[j]);
      }
      search(next, next_cands);
    }
  }

  ExtensionChecker checker_;
  int upper_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
};

}  // namespace

// ---------------------------------------------------------------------------
// mu_k

SolveResult mu_k(const Graph& g, int k, const SolveLimits& limits) {
  require_tolerance(k);
  require_connected(g, "mu_k");
  require_order(g, limits.mu_max_n, "mu_k");
  const int n = g.order();
  const auto metrics = metric_summary(g);
  const int upper = std::min(n, n - metrics.diameter + k + 1);

  // Incumbent: a maximum-degree vertex's open (k = 0) or closed neighbourhood.
  Vertex hub = degree_order(g).front();
  std::vector<Vertex> nb(g.neighbors(hub).begin(), g.neighbors(hub).end());
  if (k >= 1 || nb.empty()) nb.push_back(hub);
  VertexSet incumbent(nb);

  MuSearch search(g, k, upper);
  if (mkv_check(g, incumbent, k).verdict) search.seed(incumbent);
  search.run(degree_order(g));

  SolveResult out;
  out.witness = VertexSet(search.best());
  out.value = static_cast<int>(out.witness.size());
  out.nodes_explored = search.nodes();
  if (!mkv_check(g, out.witness, k).verdict) throw std::logic_error("mu_k produced an invalid witness");
  return out;
}

// ---------------------------------------------------------------------------
// Variants

SolveResult mu_k_variant(const Graph& g, int k, Variant variant, const SolveLimits& limits) {
  require_tolerance(k);
  require_connected(g, "mu_k_variant");
  require_order(g, limits.variant_max_n, "mu_k_variant");
  const int n = g.order();
  ObstructionEngine engine(g);
  SolveResult out;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int size = n; size >= 0; --size) {
    if (size == 0) {
      ++out.nodes_explored;
      return out;  // the empty set satisfies every variant
    }
    // Gosper's hack over all n-bit masks of this popcount.
    std::uint64_t mask = size == 64 ? full : (std::uint64_t{1} << size) - 1;
    while (true) {
      ++out.nodes_explored;
      auto x = VertexSet::from_mask(mask);
      if (check_variant(engine, x, k, variant).verdict) {
        out.value = size;
        out.witness = std::move(x);
        return out;
      }
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      if (ripple == 0 || ripple > full) break;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
      if (mask > full) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// General position

bool is_general_position(const Graph& g, const VertexSet& s) {
  s.validate(g);
  DistanceMatrix dm(g);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!is_finite(dm(s[i], s[j]))) continue;
      for (std::size_t l = 0; l < s.size(); ++l) {
        if (l != i && l != j && dm.between(s[i], s[l], s[j])) return false;
      }
    }
  }
  return true;
}

namespace {

class GpSearch {
 public:
  explicit GpSearch(const Graph& g) : n_(g.order()), interior_(static_cast<std::size_t>(n_ * n_), 0) {
    DistanceMatrix dm(g);
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b = 0; b < n_; ++b) {
        std::uint64_t m = 0;
        for (Vertex w = 0; w < n_; ++w) {
          if (w != a && w != b && dm.between(a, w, b)) m |= std::uint64_t{1} << w;
        }
        interior_[a * n_ + b] = m;
      }
    }
  }

  void run(const std::vector<Vertex>& order) { search({}, 0, 0, order); }

  std::vector<Vertex> best;
  std::uint64_t nodes = 0;

 private:
  std::uint64_t interior(Vertex a, Vertex b) const { return interior_[a * n_ + b]; }

  // forbidden: union of interiors of member pairs.
  void search(const std::vector<Vertex>& members, std::uint64_t set_mask, std::uint64_t forbidden,
              const std::vector<Vertex>& cands) {
    ++nodes;
    if (members.size() > best.size()) best = members;
    if (static_cast<int>(best.size()) == n_) return;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (members.size() + (cands.size() - i) <= best.size()) return;
      const Vertex v = cands[i];
      std::vector<Vertex> next = members;
      next.push_back(v);
      const std::uint64_t next_mask = set_mask | (std::uint64_t{1} << v);
      std::uint64_t next_forbidden = forbidden;
      for (Vertex a : members) next_forbidden |= interior(a, v);
      std::vector<Vertex> next_cands;
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        const Vertex c = cands[j];
        if (next_forbidden >> c & 1) continue;
        bool ok = true;
        for (Vertex a : next) {
          if (interior(a, c) & next_mask) {
            ok = false;
            break;
          }
        }
        if (ok) next_cands.push_back(c);
      }
      search(next, next_mask, next_forbidden, next_cands);
    }
  }

  int n_;
  std::vector<std::uint64_t> interior_;
};

}  // namespace

SolveResult gp_number(const Graph& g, const SolveLimits& limits) {
  require_connected(g, "gp_number");
  require_order(g, limits.gp_max_n, "gp_number");
  GpSearch search(g);
  search.run(degree_order(g));
  SolveResult out;
  out.witness = VertexSet(search.best);
  out.value = static_cast<int>(out.witness.size());
  out.nodes_explored = search.nodes;
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

int BoundsRecord::min_upper() const noexcept {
  int m = std::min({trivial_bound, diameter_bound, isometric_bound});
  if (girth_bound) m = std::min(m, *girth_bound);
  return m;
}

int BoundsRecord::max_lower() const noexcept { return std::max(degree_lower, gp_lower.value_or(0)); }

bool exceeds_girth_bound(const BoundsRecord& b, int mu) noexcept { return b.girth_bound && mu > *b.girth_bound; }

BoundsRecord bounds(const Graph& g, int k, std::optional<std::span<const Vertex>> isometric_path,
                    const SolveLimits& limits) {
  require_tolerance(k);
  require_connected(g, "bounds");
  BoundsRecord b;
  const auto metrics = metric_summary(g);
  b.n = g.order();
  b.k = k;
  b.diameter = metrics.diameter;
  if (is_finite(metrics.girth)) b.girth = metrics.girth;
  b.diameter_bound = b.n - b.diameter + k + 1;
  if (b.girth) b.girth_bound = b.n - *b.girth + 2 * k + 3;
  b.trivial_bound = b.n;
  b.degree_lower = metrics.max_degree + (k >= 1 ? 1 : 0);
  if (b.n <= std::min(limits.gp_max_n, 64)) b.gp_lower = gp_number(g, limits).value;

  if (isometric_path) {
    if (isometric_path->empty()) throw InvalidInput("isometric path must be nonempty");
    if (!is_isometric_path(g, *isometric_path)) throw InvalidInput("supplied path is not isometric");
    b.isometric_path.assign(isometric_path->begin(), isometric_path->end());
  } else {
    b.isometric_path = diametral_geodesic(g);
  }
  const int length = static_cast<int>(b.isometric_path.size()) - 1;
  b.isometric_bound = b.n - length + k + 1;
  return b;
}

// ---------------------------------------------------------------------------
// Polynomial

int Polynomial::degree() const noexcept {
  for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i) {
    if (coefficients[i] != 0) return i;
  }
  return -1;
}

std::uint64_t Polynomial::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : coefficients) t += c;
  return t;
}

namespace {

void count_family(ExtensionChecker& checker, const ExtensionChecker::State& state, const std::vector<Vertex>& cands,
                  std::vector<std::uint64_t>& coeff) {
  for (std::size_t i = 0; i < cands.size(); ++i) {
    auto next = checker.extend(state, cands[i]);
    ++coeff[next.members.size()];
    std::vector<Vertex> next_cands;
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (checker.can_extend(next, cands[j])) next_cands.push_back(cands[j]);
    }
    count_family(checker, next, next_cands, coeff);
  }
}

}  // namespace

Polynomial visibility_polynomial(const Graph& g, int k, const SolveLimits& limits) {
  require_tolerance(k);
  require_connected(g, "visibility_polynomial");
  require_order(g, limits.poly_max_n, "visibility_polynomial");
  Polynomial p;
  p.coefficients.assign(static_cast<std::size_t>(g.order()) + 1, 0);
  p.coefficients[0] = 1;
  ExtensionChecker checker(g, k);
  count_family(checker, checker.empty_state(), VertexSet::range(g.order()).members(), p.coefficients);
  while (p.coefficients.size() > 1 && p.coefficients.back() == 0) p.coefficients.pop_back();
  return p;
}

// ---------------------------------------------------------------------------
// Constructions

VertexSet cycle_extremal_set(int n, int k) {
  if (n < 3) throw InvalidInput("cycle_extremal_set needs n >= 3");
  require_tolerance(k);
  if (2 * k + 3 > n) {
    throw InvalidInput("cycle_extremal_set needs 2k+3 <= n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                       "); use all of V(C_n) instead");
  }
  const int r = n - (2 * k + 3);
  const int s = r / 2;
  std::vector<Vertex> members;
  for (int i = 0; i < k + 2; ++i) members.push_back(i);
  const int b0 = k + 2 + s;
  for (int i = 0; i < k + 1; ++i) members.push_back(b0 + i);
  return VertexSet(std::move(members));
}

int hull_cover_bound(const Graph& g, std::span<const VertexSet> parts, int k, const SolveLimits& limits) {
  require_tolerance(k);
  require_connected(g, "hull_cover_bound");
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const auto& part : parts) {
    part.validate(g);
    if (part.empty()) throw InvalidInput("hull cover parts must be nonempty");
    for (Vertex v : part) covered[v] = 1;
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw InvalidInput("hull cover parts do not cover every vertex");
  }
  int total = 0;
  for (const auto& part : parts) {
    auto hull = convex_hull(g, part);
    total += mu_k(induced_subgraph(g, hull), k, limits).value;
  }
  return total;
}

}  // namespace mkvis
