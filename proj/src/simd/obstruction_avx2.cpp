#include <immintrin.h>

#include <cstring>

#include "mkvis/simd/obstruction.hpp"

namespace mkvis::simd {

void obstruction_counts_avx2(const LevelInput& in, std::uint8_t* out) {
  const auto stride = static_cast<std::size_t>(in.stride);
  std::memset(out, kUnreached, static_cast<std::size_t>(in.n) * stride);
  for (int v = 0; v < in.n; ++v) out[v * stride + v] = 0;

  for (int level = 1; level <= in.max_level; ++level) {
    const __m256i here = _mm256_set1_epi8(static_cast<char>(level));
    const __m256i prev = _mm256_set1_epi8(static_cast<char>(level - 1));
    for (int w = 0; w < in.n; ++w) {
      const std::uint8_t* row_dist = in.dist + w * stride;
      std::uint8_t* row_out = out + w * stride;
      for (std::uint32_t e = in.offsets[w]; e < in.offsets[w + 1]; ++e) {
        const int u = in.targets[e];
        const __m256i add = _mm256_set1_epi8(static_cast<char>(level >= 2 ? in.weight[u] : 0));
        const std::uint8_t* pred_dist = in.dist + u * stride;
        const std::uint8_t* pred_out = out + u * stride;
        for (std::size_t v = 0; v < stride; v += 32) {
          const __m256i d_w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_dist + v));
          const __m256i d_u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred_dist + v));
          const __m256i mask = _mm256_and_si256(_mm256_cmpeq_epi8(d_w, here), _mm256_cmpeq_epi8(d_u, prev));
          if (_mm256_testz_si256(mask, mask)) continue;
          const __m256i c_u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred_out + v));
          __m256i c_w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_out + v));
          const __m256i cand = _mm256_min_epu8(c_w, _mm256_adds_epu8(c_u, add));
          c_w = _mm256_blendv_epi8(c_w, cand, mask);
          _mm256_storeu_si256(reinterpret_cast<__m256i*>(row_out + v), c_w);
        }
      }
    }
  }
}

}  // namespace mkvis::simd
