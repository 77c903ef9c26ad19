#pragma once

// Batched bit-mask kernels used by the exhaustive sweeps (phi over every
// region set, coset enumeration, Boolean algebra checks).
//
// Each kernel has a portable scalar reference and, where the target supports
// it, an AVX2 (x86-64) or NEON (aarch64) variant. The variant is chosen once
// at startup from the CPU's capabilities; force_isa() overrides the choice so
// tests can compare every variant against the reference.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace rcc::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

// Best variant the running CPU supports.
Isa detected_isa() noexcept;

// Variant used by the dispatching entry points below.
Isa active_isa() noexcept;

// Throws std::invalid_argument when the CPU cannot run `isa`.
void force_isa(Isa isa);

bool isa_supported(Isa isa) noexcept;

// Variants compiled into this binary, scalar first.
std::vector<Isa> available_isas();

// out[k] = XOR of columns[j] over every bit j set in selectors[k].
// Requires columns.size() <= 64 and out.size() == selectors.size(); bits of a
// selector at positions >= columns.size() are ignored.
void xor_combine(std::span<const std::uint64_t> columns, std::span<const std::uint64_t> selectors,
                 std::span<std::uint64_t> out);

// out[k] = popcount(in[k]).
void popcount(std::span<const std::uint64_t> in, std::span<std::uint32_t> out);

namespace scalar {
void xor_combine(std::span<const std::uint64_t> columns, std::span<const std::uint64_t> selectors,
                 std::span<std::uint64_t> out);
void popcount(std::span<const std::uint64_t> in, std::span<std::uint32_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define RCC_HAVE_AVX2_KERNELS 1
namespace avx2 {
void xor_combine(std::span<const std::uint64_t> columns, std::span<const std::uint64_t> selectors,
                 std::span<std::uint64_t> out);
void popcount(std::span<const std::uint64_t> in, std::span<std::uint32_t> out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define RCC_HAVE_NEON_KERNELS 1
namespace neon {
void xor_combine(std::span<const std::uint64_t> columns, std::span<const std::uint64_t> selectors,
                 std::span<std::uint64_t> out);
void popcount(std::span<const std::uint64_t> in, std::span<std::uint32_t> out);
}  // namespace neon
#endif

}  // namespace rcc::kernels
