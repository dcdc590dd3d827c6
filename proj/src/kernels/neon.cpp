// NEON variants (aarch64, where NEON is part of the base ISA).

#include <arm_neon.h>

#include "variants.hpp"

namespace subdens::kernels::detail {
namespace {

inline std::uint64_t lane_count(uint64x2_t v) {
  // vcnt counts bits per byte; vaddlvq widens and sums the 16 byte counts.
  return vaddlvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::uint64_t popcount_neon(const Word* a, std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) total += lane_count(vld1q_u64(a + i));
  for (; i < words; ++i) total += __builtin_popcountll(a[i]);
  return total;
}

std::uint64_t and_popcount_neon(const Word* a, const Word* b, std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) total += lane_count(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) total += __builtin_popcountll(a[i] & b[i]);
  return total;
}

std::uint64_t and_andnot_popcount_neon(const Word* a, const Word* b, const Word* mask,
                                       std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    // vbicq(x, y) computes x & ~y
    const uint64x2_t v = vbicq_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)), vld1q_u64(mask + i));
    total += lane_count(v);
  }
  for (; i < words; ++i) total += __builtin_popcountll(a[i] & b[i] & ~mask[i]);
  return total;
}

void and_into_neon(Word* dst, const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) dst[i] = a[i] & b[i];
}

void andnot_into_neon(Word* dst, const Word* a, const Word* mask, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(mask + i)));
  for (; i < words; ++i) dst[i] = a[i] & ~mask[i];
}

}  // namespace

const KernelSet& neon_kernels() {
  static const KernelSet set{Isa::neon,         popcount_neon,  and_popcount_neon,
                             and_andnot_popcount_neon, and_into_neon, andnot_into_neon};
  return set;
}

}  // namespace subdens::kernels::detail
