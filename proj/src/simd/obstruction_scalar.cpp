#include <algorithm>
#include <cstring>

#include "mkvis/simd/obstruction.hpp"

namespace mkvis::simd {

namespace {

void init_output(const LevelInput& in, std::uint8_t* out) {
  std::memset(out, kUnreached, static_cast<std::size_t>(in.n) * in.stride);
  for (int v = 0; v < in.n; ++v) out[static_cast<std::size_t>(v) * in.stride + v] = 0;
}

}  // namespace

void obstruction_counts_scalar(const LevelInput& in, std::uint8_t* out) {
  init_output(in, out);
  const auto stride = static_cast<std::size_t>(in.stride);
  for (int level = 1; level <= in.max_level; ++level) {
    const auto here = static_cast<std::uint8_t>(level);
    const auto prev = static_cast<std::uint8_t>(level - 1);
    for (int w = 0; w < in.n; ++w) {
      const std::uint8_t* row_dist = in.dist + w * stride;
      std::uint8_t* row_out = out + w * stride;
      for (std::uint32_t e = in.offsets[w]; e < in.offsets[w + 1]; ++e) {
        const int u = in.targets[e];
        const std::uint8_t add = level >= 2 ? in.weight[u] : 0;
        const std::uint8_t* pred_dist = in.dist + u * stride;
        const std::uint8_t* pred_out = out + u * stride;
        for (int v = 0; v < in.n; ++v) {
          if (row_dist[v] == here && pred_dist[v] == prev) {
            const int cand = std::min<int>(pred_out[v] + add, kUnreached);
            row_out[v] = static_cast<std::uint8_t>(std::min<int>(row_out[v], cand));
          }
        }
      }
    }
  }
}

}  // namespace mkvis::simd
