#include <gtest/gtest.h>

#include <random>

#include "subdens/kernels.hpp"

using namespace subdens::kernels;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> out(n);
  for (Word& w : out) w = rng();
  return out;
}

}  // namespace

TEST(Kernels, ScalarIsAlwaysAvailableAndFirst) {
  const auto sets = available_kernels();
  ASSERT_FALSE(sets.empty());
  EXPECT_EQ(sets.front()->isa, Isa::scalar);
}

TEST(Kernels, ScalarReferenceValues) {
  const KernelSet& k = scalar_kernels();
  const std::vector<Word> a{~Word{0}, 0xF0F0};
  const std::vector<Word> b{0xFF, 0xFF00};
  const std::vector<Word> mask{0x0F, 0};
  EXPECT_EQ(k.popcount(a.data(), 2), 64U + 8U);
  EXPECT_EQ(k.and_popcount(a.data(), b.data(), 2), 8U + 4U);
  EXPECT_EQ(k.and_andnot_popcount(a.data(), b.data(), mask.data(), 2), 4U + 4U);
  std::vector<Word> dst(2);
  k.and_into(dst.data(), a.data(), b.data(), 2);
  EXPECT_EQ(dst, (std::vector<Word>{0xFF, 0xF000}));
  k.andnot_into(dst.data(), a.data(), mask.data(), 2);
  EXPECT_EQ(dst, (std::vector<Word>{~Word{0x0F}, 0xF0F0}));
}

// Every compiled variant must agree bit for bit with the scalar reference,
// including lengths that leave a tail after the vector loop.
TEST(Kernels, VariantsMatchScalar) {
  std::mt19937_64 rng(7);
  const KernelSet& ref = scalar_kernels();
  for (const KernelSet* set : available_kernels()) {
    SCOPED_TRACE(std::string(isa_name(set->isa)));
    for (std::size_t words = 0; words <= 37; ++words) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_words(rng, words);
        const auto b = random_words(rng, words);
        const auto m = random_words(rng, words);
        EXPECT_EQ(set->popcount(a.data(), words), ref.popcount(a.data(), words));
        EXPECT_EQ(set->and_popcount(a.data(), b.data(), words), ref.and_popcount(a.data(), b.data(), words));
        EXPECT_EQ(set->and_andnot_popcount(a.data(), b.data(), m.data(), words),
                  ref.and_andnot_popcount(a.data(), b.data(), m.data(), words));
        std::vector<Word> got(words), want(words);
        set->and_into(got.data(), a.data(), b.data(), words);
        ref.and_into(want.data(), a.data(), b.data(), words);
        EXPECT_EQ(got, want);
        set->andnot_into(got.data(), a.data(), m.data(), words);
        ref.andnot_into(want.data(), a.data(), m.data(), words);
        EXPECT_EQ(got, want);
      }
    }
  }
}

TEST(Kernels, ForceSelectsAvailableVariantsOnly) {
  const Isa before = active().isa;
  EXPECT_TRUE(force(Isa::scalar));
  EXPECT_EQ(active().isa, Isa::scalar);
  for (const KernelSet* set : available_kernels()) {
    EXPECT_TRUE(force(set->isa));
    EXPECT_EQ(active().isa, set->isa);
  }
  force(before);
}
