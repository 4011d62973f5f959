#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "mkvis/error.hpp"
#include "mkvis/generators.hpp"
#include "mkvis/kernel.hpp"
#include "mkvis/solvers.hpp"

using namespace mkvis;

namespace {

std::vector<int> as_ints(const VertexSet& s) { return {s.begin(), s.end()}; }

// gp by brute force over masks with an independent distance table.
int brute_gp(const Graph& g) {
  const int n = g.order();
  auto d = brute::distances(g);
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto s = brute::members(mask);
    bool ok = true;
    for (int u : s) {
      for (int v : s) {
        for (int w : s) {
          if (u < v && w != u && w != v && d[u][w] + d[w][v] == d[u][v]) ok = false;
        }
      }
    }
    if (ok) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

int brute_variant_mu(const Graph& g, int k, Variant variant) {
  const int n = g.order();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x = VertexSet::from_mask(mask);
    if (static_cast<int>(x.size()) > best && check_variant(g, x, k, variant).verdict) best = static_cast<int>(x.size());
  }
  return best;
}

}  // namespace

TEST_CASE("mu_k examples") {
  CHECK(mu_k(path_graph(5), 1).value == 3);
  CHECK(mu_k(cycle_graph(9), 2).value == 7);
  CHECK(mu_k(complete_bipartite(2, 3), 1).value == 5);
  CHECK(mu_k(path_graph(1), 0).value == 1);
  CHECK(mu_k(path_graph(2), 0).value == 2);
  CHECK_THROWS_AS(mu_k(path_graph(30), 0), LimitExceeded);
  CHECK(mu_k(path_graph(30), 0, {.mu_max_n = 30}).value == 2);
  CHECK_THROWS_AS(mu_k(build_graph(3, {{0, 1}}), 0), Disconnected);
  CHECK_THROWS_AS(mu_k(path_graph(3), -1), InvalidInput);
}

TEST_CASE("mu_k matches brute force and its witness verifies") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_connected(2 + static_cast<int>(seed % 9), 0.1 + 0.1 * static_cast<double>(seed % 4), seed);
    int previous = 0;
    const int d = metric_summary(g).diameter;
    for (int k = 0; k <= 4; ++k) {
      auto r = mu_k(g, k);
      CHECK(r.value == brute::mu(g, k));
      CHECK(static_cast<int>(r.witness.size()) == r.value);
      CHECK(mkv_check(g, r.witness, k).verdict);
      CHECK(r.value >= previous);
      CHECK((r.value == g.order()) == (k >= d - 1));
      previous = r.value;
    }
    if (g.order() >= 2) CHECK(mu_k(g, g.order() - 2).value == mu_k(g, g.order() + 3).value);
  }
}

TEST_CASE("saturation at k = d - 1") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_connected(6 + static_cast<int>(seed % 10), 0.15, seed);
    const int d = metric_summary(g).diameter;
    CHECK(mu_k(g, d - 1).value == g.order());
    if (d >= 2) CHECK(mu_k(g, d - 2).value < g.order());
  }
}

TEST_CASE("variant examples") {
  for (int k = 0; k <= 2; ++k) CHECK(mu_k_variant(complete_graph(5), k, Variant::kTotal).value == 5);
  auto r = mu_k_variant(path_graph(3), 0, Variant::kTotal);
  CHECK(r.value == 2);
  CHECK(r.witness == VertexSet{0, 2});
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Graph g = random_connected(5 + static_cast<int>(seed % 4), 0.2, seed);
    const int d = metric_summary(g).diameter;
    for (auto v : {Variant::kTotal, Variant::kOuter, Variant::kDual}) {
      CHECK(mu_k_variant(g, std::max(d - 1, 0), v).value == g.order());
    }
  }
  CHECK_THROWS_AS(mu_k_variant(path_graph(19), 0, Variant::kDual), LimitExceeded);
}

TEST_CASE("variants match exhaustive search and order below mu_k") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_connected(3 + static_cast<int>(seed % 7), 0.25, seed);
    for (int k = 0; k <= 2; ++k) {
      int plain = mu_k(g, k).value;
      for (auto v : {Variant::kTotal, Variant::kOuter, Variant::kDual}) {
        auto r = mu_k_variant(g, k, v);
        CHECK(r.value == brute_variant_mu(g, k, v));
        CHECK(check_variant(g, r.witness, k, v).verdict);
        CHECK(r.value <= plain);
      }
      CHECK(mu_k_variant(g, k, Variant::kTotal).value <= mu_k_variant(g, k, Variant::kOuter).value);
    }
  }
}

TEST_CASE("total and outer variants are hereditary on samples") {
  std::mt19937_64 rng(21);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_connected(3 + static_cast<int>(bounded(rng, 8)), 0.3, static_cast<std::uint64_t>(trial));
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (bounded(rng, 3) == 0) members.push_back(v);
    }
    VertexSet x(members);
    std::vector<Vertex> sub;
    for (Vertex v : x) {
      if (bounded(rng, 2)) sub.push_back(v);
    }
    const int k = static_cast<int>(bounded(rng, 3));
    for (auto v : {Variant::kTotal, Variant::kOuter}) {
      if (check_variant(g, x, k, v).verdict) {
        ++positives;
        CHECK(check_variant(g, VertexSet(sub), k, v).verdict);
      }
    }
  }
  CHECK(positives > 50);
}

TEST_CASE("dual variant is not hereditary") {
  // On P_3, X = {0, 1} passes at k = 0 while {1} blocks the pair (0, 2).
  CHECK(check_variant(path_graph(3), {0, 1}, 0, Variant::kDual).verdict);
  CHECK_FALSE(check_variant(path_graph(3), {1}, 0, Variant::kDual).verdict);
  bool found = false;
  for (int n = 3; n <= 7 && !found; ++n) {
    Graph g = path_graph(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !found; ++mask) {
      VertexSet x = VertexSet::from_mask(mask);
      if (!check_variant(g, x, 0, Variant::kDual).verdict) continue;
      for (Vertex v : x) {
        std::vector<Vertex> rest;
        for (Vertex w : x) {
          if (w != v) rest.push_back(w);
        }
        if (!check_variant(g, VertexSet(rest), 0, Variant::kDual).verdict) found = true;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("general position number") {
  for (int n = 1; n <= 6; ++n) CHECK(gp_number(complete_graph(n)).value == n);
  for (int n = 2; n <= 9; ++n) CHECK(gp_number(path_graph(n)).value == 2);
  CHECK(gp_number(cycle_graph(4)).value == 2);
  CHECK(is_general_position(cycle_graph(5), {0, 1, 3}));
  CHECK_FALSE(is_general_position(path_graph(3), {0, 1, 2}));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_connected(3 + static_cast<int>(seed % 8), 0.25, seed);
    auto r = gp_number(g);
    CHECK(r.value == brute_gp(g));
    CHECK(is_general_position(g, r.witness));
    CHECK(static_cast<int>(r.witness.size()) == r.value);
  }
  CHECK_THROWS_AS(gp_number(path_graph(21)), LimitExceeded);
}

TEST_CASE("bounds examples") {
  auto b = bounds(cycle_graph(7), 0);
  CHECK(b.diameter_bound == 5);
  REQUIRE(b.girth_bound);
  CHECK(*b.girth_bound == 3);
  CHECK(b.min_upper() == 3);
  CHECK(mu_k(cycle_graph(7), 0).value == 3);

  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= 3; ++k) {
      auto p = bounds(path_graph(n), k);
      CHECK(p.diameter_bound == k + 2);
      CHECK_FALSE(p.girth_bound);
      CHECK_FALSE(p.girth);
      CHECK(p.min_upper() == std::min(n, k + 2));
      CHECK(p.isometric_bound == p.diameter_bound);
    }
  }

  b = bounds(complete_bipartite(2, 3), 1);
  CHECK(b.degree_lower == 4);
  CHECK(bounds(complete_bipartite(2, 3), 0).degree_lower == 3);
  CHECK(b.gp_lower.has_value());
  CHECK_FALSE(bounds(path_graph(25), 0).gp_lower);
}

TEST_CASE("supplied isometric paths") {
  Graph c8 = cycle_graph(8);
  std::vector<Vertex> p{0, 1, 2, 3, 4};
  auto b = bounds(c8, 1, std::span<const Vertex>(p));
  CHECK(b.isometric_bound == 8 - 4 + 1 + 1);
  CHECK(b.isometric_path == p);
  std::vector<Vertex> bad{0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(bounds(c8, 1, std::span<const Vertex>(bad)), InvalidInput);
}

TEST_CASE("bound sandwich on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_connected(3 + static_cast<int>(seed % 10), 0.2, seed);
    for (int k = 0; k <= 3; ++k) {
      auto b = bounds(g, k);
      int mu = mu_k(g, k).value;
      CHECK(b.max_lower() <= mu);
      CHECK(mu <= b.diameter_bound);
      CHECK(mu <= b.trivial_bound);
      CHECK_FALSE(exceeds_girth_bound(b, mu));
    }
  }
}

TEST_CASE("girth bound flag") {
  BoundsRecord b;
  b.girth_bound = 4;
  CHECK(exceeds_girth_bound(b, 5));
  CHECK_FALSE(exceeds_girth_bound(b, 4));
  b.girth_bound.reset();
  CHECK_FALSE(exceeds_girth_bound(b, 100));
}

TEST_CASE("visibility polynomial") {
  CHECK(visibility_polynomial(path_graph(3), 0).coefficients == std::vector<std::uint64_t>{1, 3, 3});
  for (int n = 1; n <= 6; ++n) {
    auto p = visibility_polynomial(complete_graph(n), 1);
    for (int i = 0; i <= n; ++i) CHECK(p.coefficients[i] == brute::binomial(n, i));
    CHECK(p.total() == (std::uint64_t{1} << n));
  }
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_connected(3 + static_cast<int>(seed % 8), 0.2, seed);
    for (int k = 0; k <= 2; ++k) {
      auto p = visibility_polynomial(g, k);
      auto counts = brute::visible_counts(g, k);
      while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
      CHECK(p.coefficients == counts);
      CHECK(p.degree() == mu_k(g, k).value);
    }
  }
  CHECK_THROWS_AS(visibility_polynomial(path_graph(19), 0), LimitExceeded);
}

TEST_CASE("cycle extremal set") {
  auto s = cycle_extremal_set(9, 2);
  CHECK(s == VertexSet{0, 1, 2, 3, 5, 6, 7});
  CHECK(mkv_check(cycle_graph(9), s, 2).verdict);
  CHECK(cycle_extremal_set(3, 0) == VertexSet{0, 1, 2});
  CHECK(cycle_extremal_set(7, 1).size() == 5);
  CHECK_THROWS_AS(cycle_extremal_set(6, 2), InvalidInput);
  CHECK_THROWS_AS(cycle_extremal_set(2, 0), InvalidInput);
  for (int n = 3; n <= 14; ++n) {
    for (int k = 0; 2 * k + 3 <= n; ++k) CHECK(mkv_check(cycle_graph(n), cycle_extremal_set(n, k), k).verdict);
  }
}

TEST_CASE("hull cover bound") {
  std::vector<VertexSet> halves{{0, 1}, {2, 3}};
  CHECK(hull_cover_bound(path_graph(4), halves, 0) == 4);
  std::vector<VertexSet> whole{VertexSet::range(6)};
  CHECK(hull_cover_bound(cycle_graph(6), whole, 1) == mu_k(cycle_graph(6), 1).value);
  std::vector<VertexSet> arcs{{0, 1, 2}, {3, 4, 5}};
  CHECK(hull_cover_bound(cycle_graph(6), arcs, 0) >= mu_k(cycle_graph(6), 0).value);
  std::vector<VertexSet> partial{{0, 1}};
  CHECK_THROWS_AS(hull_cover_bound(path_graph(4), partial, 0), InvalidInput);
}

TEST_CASE("convex subgraphs never exceed the whole graph") {
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Graph g = random_connected(4 + static_cast<int>(seed % 8), 0.25, seed);
    std::vector<Vertex> pick{static_cast<Vertex>(bounded(rng, static_cast<std::uint64_t>(g.order()))),
                             static_cast<Vertex>(bounded(rng, static_cast<std::uint64_t>(g.order())))};
    if (pick[0] == pick[1]) continue;
    VertexSet hull = convex_hull(g, VertexSet(pick));
    Graph h = induced_subgraph(g, hull);
    for (int k = 0; k <= 2; ++k) CHECK(mu_k(h, k).value <= mu_k(g, k).value);
  }
}

TEST_CASE("witnesses are members of the graph") {
  auto r = mu_k(complete_bipartite(3, 3), 0);
  CHECK(r.witness.is_subset_of(VertexSet::range(6)));
  CHECK(brute::mutually_visible(complete_bipartite(3, 3), brute::distances(complete_bipartite(3, 3)), as_ints(r.witness), 0));
}
