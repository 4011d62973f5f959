#pragma once

#include <cstdint>
#include <random>

#include "mkvis/graph.hpp"

namespace mkvis {

// Draws used by every generator: bounded ints by multiply-shift and doubles
// from the top 53 bits, so that sequences match across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);
double unit(std::mt19937_64& rng);

// Vertices 0..n-1 in path/cycle order.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// Parts {0..m-1} and {m..m+n-1}.
Graph complete_bipartite(int m, int n);

// Random spanning tree (each vertex attaches to a uniformly chosen earlier
// vertex of a shuffled order) plus every remaining pair independently with
// probability edge_probability. Engine: std::mt19937_64 seeded with seed.
Graph random_connected(int n, double edge_probability, std::uint64_t seed);

// Grows a chain of cliques: the first block has uniform size in
// [2, max_block_size]; each further block picks an existing vertex as its
// cut vertex and adds size-1 fresh vertices forming a clique with it.
Graph random_block_graph(int block_count, int max_block_size, std::uint64_t seed);

}  // namespace mkvis
