#include <atomic>

#include "variants.hpp"

namespace subdens::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(SUBDENS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelSet* widest() {
  const auto all = available_kernels();
  return all.back();
}

std::atomic<const KernelSet*>& selection() {
  static std::atomic<const KernelSet*> current{widest()};
  return current;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> sets{&scalar_kernels()};
#if defined(SUBDENS_HAVE_AVX2)
  if (cpu_has_avx2()) sets.push_back(&detail::avx2_kernels());
#endif
#if defined(SUBDENS_HAVE_NEON)
  sets.push_back(&detail::neon_kernels());
#endif
  return sets;
}

const KernelSet& active() { return *selection().load(std::memory_order_relaxed); }

bool force(Isa isa) {
  for (const KernelSet* set : available_kernels()) {
    if (set->isa == isa) {
      selection().store(set, std::memory_order_relaxed);
      return true;
    }
  }
  return false;
}

}  // namespace subdens::kernels
