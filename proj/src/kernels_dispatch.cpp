#include <atomic>
#include <stdexcept>
#include <string>

#include "rcc/kernels.hpp"

namespace rcc::kernels {
namespace {

struct Table {
  void (*xor_combine)(std::span<const std::uint64_t>, std::span<const std::uint64_t>, std::span<std::uint64_t>);
  void (*popcount)(std::span<const std::uint64_t>, std::span<std::uint32_t>);
};

Table table_for(Isa isa) noexcept {
  switch (isa) {
#ifdef RCC_HAVE_AVX2_KERNELS
    case Isa::Avx2:
      return {avx2::xor_combine, avx2::popcount};
#endif
#ifdef RCC_HAVE_NEON_KERNELS
    case Isa::Neon:
      return {neon::xor_combine, neon::popcount};
#endif
    default:
      return {scalar::xor_combine, scalar::popcount};
  }
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#ifdef RCC_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#ifdef RCC_HAVE_NEON_KERNELS
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("kernel variant not supported here: " + std::string(isa_name(isa)));
  current().store(isa, std::memory_order_relaxed);
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (isa_supported(isa)) out.push_back(isa);
  return out;
}

void xor_combine(std::span<const std::uint64_t> columns, std::span<const std::uint64_t> selectors,
                 std::span<std::uint64_t> out) {
  table_for(active_isa()).xor_combine(columns, selectors, out);
}

void popcount(std::span<const std::uint64_t> in, std::span<std::uint32_t> out) {
  table_for(active_isa()).popcount(in, out);
}

}  // namespace rcc::kernels
