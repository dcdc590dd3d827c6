// AVX2 variants. This translation unit is compiled with -mavx2 -mpopcnt and
// must only be entered after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include "variants.hpp"

namespace subdens::kernels::detail {
namespace {

// Nibble-table popcount (Mula): per-byte counts via pshufb, then horizontal
// byte sums with sad_epu8 into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::uint64_t hsum(__m256i acc) {
  return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
}

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

std::uint64_t popcount_avx2(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  std::uint64_t total = hsum(acc);
  for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
  return total;
}

std::uint64_t and_popcount_avx2(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::uint64_t total = hsum(acc);
  for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

std::uint64_t and_andnot_popcount_avx2(const Word* a, const Word* b, const Word* mask,
                                       std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    // andnot(x, y) computes ~x & y
    const __m256i v = _mm256_andnot_si256(load(mask + i), _mm256_and_si256(load(a + i), load(b + i)));
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  std::uint64_t total = hsum(acc);
  for (; i < words; ++i) {
    total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i] & ~mask[i]));
  }
  return total;
}

void and_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_and_si256(load(a + i), load(b + i)));
  }
  for (; i < words; ++i) dst[i] = a[i] & b[i];
}

void andnot_into_avx2(Word* dst, const Word* a, const Word* mask, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_andnot_si256(load(mask + i), load(a + i)));
  }
  for (; i < words; ++i) dst[i] = a[i] & ~mask[i];
}

}  // namespace

const KernelSet& avx2_kernels() {
  static const KernelSet set{Isa::avx2,         popcount_avx2,  and_popcount_avx2,
                             and_andnot_popcount_avx2, and_into_avx2, andnot_into_avx2};
  return set;
}

}  // namespace subdens::kernels::detail
