#include "rcc/kernels.hpp"

#include <arm_neon.h>

#include <cassert>

namespace rcc::kernels::neon {

void xor_combine(std::span<const std::uint64_t> columns, std::span<const std::uint64_t> selectors,
                 std::span<std::uint64_t> out) {
  assert(columns.size() <= 64 && out.size() == selectors.size());
  const std::size_t n = selectors.size();
  const uint64x2_t one = vdupq_n_u64(1);
  const uint64x2_t zero = vdupq_n_u64(0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    uint64x2_t sel = vld1q_u64(selectors.data() + k);
    uint64x2_t acc = zero;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const uint64x2_t take = vsubq_u64(zero, vandq_u64(sel, one));
      acc = veorq_u64(acc, vandq_u64(take, vdupq_n_u64(columns[j])));
      sel = vshrq_n_u64(sel, 1);
    }
    vst1q_u64(out.data() + k, acc);
  }
  if (k < n) scalar::xor_combine(columns, selectors.subspan(k), out.subspan(k));
}

void popcount(std::span<const std::uint64_t> in, std::span<std::uint32_t> out) {
  assert(in.size() == out.size());
  const std::size_t n = in.size();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(in.data() + k)));
    const uint64x2_t sums = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes)));
    out[k] = static_cast<std::uint32_t>(vgetq_lane_u64(sums, 0));
    out[k + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(sums, 1));
  }
  if (k < n) scalar::popcount(in.subspan(k), out.subspan(k));
}

}  // namespace rcc::kernels::neon
