// Compiled with -mavx2; only reached through dispatch after a CPU check.
#include "rcc/kernels.hpp"

#include <immintrin.h>

#include <cassert>

namespace rcc::kernels::avx2 {

void xor_combine(std::span<const std::uint64_t> columns, std::span<const std::uint64_t> selectors,
                 std::span<std::uint64_t> out) {
  assert(columns.size() <= 64 && out.size() == selectors.size());
  const std::size_t n = selectors.size();
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256i sel = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(selectors.data() + k));
    __m256i acc = zero;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      // all-ones in lanes whose selector has bit j set
      const __m256i take = _mm256_sub_epi64(zero, _mm256_and_si256(sel, one));
      const __m256i col = _mm256_set1_epi64x(static_cast<long long>(columns[j]));
      acc = _mm256_xor_si256(acc, _mm256_and_si256(take, col));
      sel = _mm256_srli_epi64(sel, 1);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), acc);
  }
  if (k < n) scalar::xor_combine(columns, selectors.subspan(k), out.subspan(k));
}

void popcount(std::span<const std::uint64_t> in, std::span<std::uint32_t> out) {
  assert(in.size() == out.size());
  // nibble lookup, then horizontal byte sums per 64-bit lane
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const std::size_t n = in.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + k));
    const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
    const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
    const __m256i sums = _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), sums);
    for (int i = 0; i < 4; ++i) out[k + i] = static_cast<std::uint32_t>(lanes[i]);
  }
  if (k < n) scalar::popcount(in.subspan(k), out.subspan(k));
}

}  // namespace rcc::kernels::avx2
