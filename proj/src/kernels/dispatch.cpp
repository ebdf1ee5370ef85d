#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "hgpeel/kernels.hpp"

namespace hgpeel::kernels {

namespace {

Isa detect() noexcept {
#if defined(HGPEEL_HAVE_AVX2_KERNELS)
  if (__builtin_cpu_supports("avx2")) return Isa::kAvx2;
#endif
#if defined(HGPEEL_HAVE_NEON_KERNELS)
  return Isa::kNeon;
#endif
  return Isa::kScalar;
}

Isa initial() noexcept {
  const char* env = std::getenv("HGPEEL_ISA");
  if (env != nullptr) {
    const std::string_view name(env);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (name == isa_name(isa) && isa_available(isa)) return isa;
    }
  }
  return detect();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#if defined(HGPEEL_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(HGPEEL_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument(std::string("ISA not available: ") + isa_name(isa));
  }
  current().store(isa, std::memory_order_relaxed);
}

#if defined(HGPEEL_HAVE_AVX2_KERNELS)
#define HGPEEL_CASE_AVX2(call) \
  case Isa::kAvx2: return avx2::call;
#else
#define HGPEEL_CASE_AVX2(call)
#endif
#if defined(HGPEEL_HAVE_NEON_KERNELS)
#define HGPEEL_CASE_NEON(call) \
  case Isa::kNeon: return neon::call;
#else
#define HGPEEL_CASE_NEON(call)
#endif

#define HGPEEL_DISPATCH(call)     \
  switch (active_isa()) {         \
    HGPEEL_CASE_AVX2(call)        \
    HGPEEL_CASE_NEON(call)        \
    default: return scalar::call; \
  }

std::size_t count_below(std::span<const std::uint32_t> values, std::uint32_t bound) {
  HGPEEL_DISPATCH(count_below(values, bound))
}

void collect_below(std::span<const std::uint32_t> values, std::uint32_t bound,
                   std::vector<std::uint32_t>& out) {
  HGPEEL_DISPATCH(collect_below(values, bound, out))
}

std::size_t count_covered(std::span<const std::uint64_t> masks, std::uint64_t subset) {
  HGPEEL_DISPATCH(count_covered(masks, subset))
}

}  // namespace hgpeel::kernels
