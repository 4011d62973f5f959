#include <cstdlib>
#include <string_view>

#include "mkvis/simd/obstruction.hpp"

namespace mkvis::simd {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
    case Isa::kScalar:
      break;
  }
  return "scalar";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(MKVIS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(MKVIS_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept {
  if (const char* forced = std::getenv("MKVIS_ISA")) {
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (isa_name(isa) == forced && isa_available(isa)) return isa;
    }
  }
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

void obstruction_counts(const LevelInput& in, std::uint8_t* out, Isa isa) {
  if (!isa_available(isa)) isa = Isa::kScalar;
  switch (isa) {
#if defined(MKVIS_HAVE_AVX2)
    case Isa::kAvx2:
      obstruction_counts_avx2(in, out);
      return;
#endif
#if defined(MKVIS_HAVE_NEON)
    case Isa::kNeon:
      obstruction_counts_neon(in, out);
      return;
#endif
    default:
      obstruction_counts_scalar(in, out);
  }
}

}  // namespace mkvis::simd
