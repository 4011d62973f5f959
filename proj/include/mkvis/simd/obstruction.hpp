#pragma once

// Level-synchronous obstruction counting over a dense byte layout.
//
// Lane v of row w holds the quantity for the pair (source v, target w), so
// one vector instruction advances many BFS sources at once. At level L,
// every target w takes, lane-wise, the minimum over its neighbours u that
// sit one level closer to the source:
//
//   out[w][v] = min_u out[u][v] + weight(u)      where d(v,w) = L, d(v,u) = L-1
//
// weight(u) is 1 for obstruction vertices and 0 otherwise, and is dropped at
// L = 1 where u is the source itself. The result is the minimum number of
// obstruction vertices strictly inside a shortest (v, w)-path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace mkvis::simd {

inline constexpr std::uint8_t kUnreached = 255;
inline constexpr int kMaxDenseOrder = 254;
inline constexpr int kLaneAlign = 32;

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;

// Widest available ISA. The MKVIS_ISA environment variable ("scalar",
// "avx2", "neon") overrides the choice when that ISA is available.
Isa best_isa() noexcept;

inline int lane_stride(int n) noexcept { return (n + kLaneAlign - 1) / kLaneAlign * kLaneAlign; }

struct LevelInput {
  int n = 0;
  int stride = 0;                         // multiple of kLaneAlign
  int max_level = 0;                      // largest finite distance
  const std::uint8_t* dist = nullptr;     // n x stride; padding lanes kUnreached
  const std::uint32_t* offsets = nullptr; // CSR adjacency, n + 1 entries
  const std::int32_t* targets = nullptr;
  const std::uint8_t* weight = nullptr;   // n entries, 0 or 1
};

// out must hold n * stride bytes; it is fully overwritten.
void obstruction_counts_scalar(const LevelInput& in, std::uint8_t* out);
#if defined(MKVIS_HAVE_AVX2)
void obstruction_counts_avx2(const LevelInput& in, std::uint8_t* out);
#endif
#if defined(MKVIS_HAVE_NEON)
void obstruction_counts_neon(const LevelInput& in, std::uint8_t* out);
#endif

// Runs the requested ISA; falls back to scalar when it is unavailable.
void obstruction_counts(const LevelInput& in, std::uint8_t* out, Isa isa);

}  // namespace mkvis::simd
