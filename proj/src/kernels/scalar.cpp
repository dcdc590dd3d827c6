#include <bit>

#include "subdens/kernels.hpp"

namespace subdens::kernels {
namespace {

std::uint64_t popcount_scalar(const Word* a, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::uint64_t and_andnot_popcount_scalar(const Word* a, const Word* b, const Word* mask,
                                         std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i] & ~mask[i]);
  return total;
}

void and_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

void andnot_into_scalar(Word* dst, const Word* a, const Word* mask, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & ~mask[i];
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{Isa::scalar,         popcount_scalar,  and_popcount_scalar,
                             and_andnot_popcount_scalar, and_into_scalar, andnot_into_scalar};
  return set;
}

}  // namespace subdens::kernels
