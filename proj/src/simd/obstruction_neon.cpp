#include <arm_neon.h>

#include <cstring>

#include "mkvis/simd/obstruction.hpp"

namespace mkvis::simd {

void obstruction_counts_neon(const LevelInput& in, std::uint8_t* out) {
  const auto stride = static_cast<std::size_t>(in.stride);
  std::memset(out, kUnreached, static_cast<std::size_t>(in.n) * stride);
  for (int v = 0; v < in.n; ++v) out[v * stride + v] = 0;

  for (int level = 1; level <= in.max_level; ++level) {
    const uint8x16_t here = vdupq_n_u8(static_cast<std::uint8_t>(level));
    const uint8x16_t prev = vdupq_n_u8(static_cast<std::uint8_t>(level - 1));
    for (int w = 0; w < in.n; ++w) {
      const std::uint8_t* row_dist = in.dist + w * stride;
      std::uint8_t* row_out = out + w * stride;
      for (std::uint32_t e = in.offsets[w]; e < in.offsets[w + 1]; ++e) {
        const int u = in.targets[e];
        const uint8x16_t add = vdupq_n_u8(level >= 2 ? in.weight[u] : 0);
        const std::uint8_t* pred_dist = in.dist + u * stride;
        const std::uint8_t* pred_out = out + u * stride;
        for (std::size_t v = 0; v < stride; v += 16) {
          const uint8x16_t mask = vandq_u8(vceqq_u8(vld1q_u8(row_dist + v), here), vceqq_u8(vld1q_u8(pred_dist + v), prev));
          if (vmaxvq_u8(mask) == 0) continue;
          const uint8x16_t c_w = vld1q_u8(row_out + v);
          const uint8x16_t cand = vminq_u8(c_w, vqaddq_u8(vld1q_u8(pred_out + v), add));
          vst1q_u8(row_out + v, vbslq_u8(mask, cand, c_w));
        }
      }
    }
  }
}

}  // namespace mkvis::simd
