#pragma once

// Bitset kernels used by the counting inner loops.
//
// Every kernel has a portable scalar reference implementation. Vector
// variants (AVX2 on x86-64, NEON on aarch64) are compiled in when the
// toolchain allows it and selected at runtime from the CPU feature set.
// All variants must return bit-identical results; tests/kernels_test.cpp
// checks each compiled variant against the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace subdens::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Function table for one instruction-set variant. Spans passed to a kernel
/// must all have the same length.
struct KernelSet {
  Isa isa;
  // popcount(a)
  std::uint64_t (*popcount)(const Word* a, std::size_t words);
  // popcount(a & b)
  std::uint64_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
  // popcount(a & b & ~mask)
  std::uint64_t (*and_andnot_popcount)(const Word* a, const Word* b, const Word* mask,
                                       std::size_t words);
  // dst = a & b
  void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
  // dst = a & ~mask
  void (*andnot_into)(Word* dst, const Word* a, const Word* mask, std::size_t words);
};

const KernelSet& scalar_kernels();

/// Variants compiled into this build whose ISA the running CPU supports.
/// The scalar set is always first.
std::vector<const KernelSet*> available_kernels();

/// The variant used by the library: the widest available one unless
/// overridden with force().
const KernelSet& active();

/// Pins the active variant (tests and benchmarking). Returns false and leaves
/// the selection unchanged when the variant is not available.
bool force(Isa isa);

// Convenience wrappers over active().

inline std::uint64_t popcount(std::span<const Word> a) {
  return active().popcount(a.data(), a.size());
}

inline std::uint64_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  return active().and_popcount(a.data(), b.data(), a.size());
}

inline std::uint64_t and_andnot_popcount(std::span<const Word> a, std::span<const Word> b,
                                         std::span<const Word> mask) {
  return active().and_andnot_popcount(a.data(), b.data(), mask.data(), a.size());
}

inline void and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  active().and_into(dst.data(), a.data(), b.data(), dst.size());
}

inline void andnot_into(std::span<Word> dst, std::span<const Word> a,
                        std::span<const Word> mask) {
  active().andnot_into(dst.data(), a.data(), mask.data(), dst.size());
}

}  // namespace subdens::kernels
