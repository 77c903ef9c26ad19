#include "rcc/kernels.hpp"

#include <bit>
#include <cassert>

namespace rcc::kernels::scalar {

void xor_combine(std::span<const std::uint64_t> columns, std::span<const std::uint64_t> selectors,
                 std::span<std::uint64_t> out) {
  assert(columns.size() <= 64 && out.size() == selectors.size());
  const std::uint64_t live =
      columns.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << columns.size()) - 1;
  for (std::size_t k = 0; k < selectors.size(); ++k) {
    std::uint64_t sel = selectors[k] & live;
    std::uint64_t acc = 0;
    while (sel != 0) {
      acc ^= columns[static_cast<std::size_t>(std::countr_zero(sel))];
      sel &= sel - 1;
    }
    out[k] = acc;
  }
}

void popcount(std::span<const std::uint64_t> in, std::span<std::uint32_t> out) {
  assert(in.size() == out.size());
  for (std::size_t k = 0; k < in.size(); ++k) out[k] = static_cast<std::uint32_t>(std::popcount(in[k]));
}

}  // namespace rcc::kernels::scalar
