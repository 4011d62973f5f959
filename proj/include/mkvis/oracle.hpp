#pragma once

#include <cstdint>

#include "mkvis/graph.hpp"

namespace mkvis {

inline constexpr std::uint64_t kDefaultGeodesicCap = 1'000'000;

// Reference implementation by explicit enumeration: walks every shortest
// (u, w)-path depth-first over the geodesic DAG and takes the minimum
// number of x-vertices strictly inside. Throws LimitExceeded once more than
// `cap` geodesics have been listed and Disconnected when w is unreachable.
int oracle_min_internal_count(const Graph& g, const VertexSet& x, Vertex u, Vertex w,
                              std::uint64_t cap = kDefaultGeodesicCap);

// Pairwise definition of mutual k-visibility on top of the oracle; pairs in
// different components are not visible.
bool oracle_is_mutual_k_visible(const Graph& g, const VertexSet& s, int k, std::uint64_t cap = kDefaultGeodesicCap);

}  // namespace mkvis
