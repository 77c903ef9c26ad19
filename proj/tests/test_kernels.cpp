#include <bit>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rcc/kernels.hpp"

using namespace rcc;

namespace {

struct RestoreIsa {
  kernels::Isa saved = kernels::active_isa();
  ~RestoreIsa() { kernels::force_isa(saved); }
};

std::vector<std::uint64_t> reference_xor(const std::vector<std::uint64_t>& cols, const std::vector<std::uint64_t>& sel) {
  std::vector<std::uint64_t> out;
  for (auto s : sel) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if ((s >> j) & 1U) acc ^= cols[j];
    out.push_back(acc);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar reference is always available and listed first") {
  const auto isas = kernels::available_isas();
  REQUIRE_FALSE(isas.empty());
  CHECK(isas.front() == kernels::Isa::Scalar);
  CHECK(kernels::isa_supported(kernels::Isa::Scalar));
  CHECK(kernels::isa_supported(kernels::detected_isa()));
  for (auto isa : {kernels::Isa::Scalar, kernels::Isa::Avx2, kernels::Isa::Neon})
    if (!kernels::isa_supported(isa)) CHECK_THROWS_AS(kernels::force_isa(isa), std::invalid_argument);
}

TEST_CASE("every variant matches the scalar kernels") {
  RestoreIsa restore;
  std::mt19937_64 rng(2024);
  for (auto isa : kernels::available_isas()) {
    CAPTURE(kernels::isa_name(isa));
    kernels::force_isa(isa);
    CHECK(kernels::active_isa() == isa);
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 255, 1000}) {
      for (std::size_t width : {0, 1, 5, 10, 33, 63, 64}) {
        std::vector<std::uint64_t> cols(width), sel(n), got(n), ref_scalar(n);
        for (auto& c : cols) c = rng();
        for (auto& s : sel) s = rng();
        kernels::xor_combine(cols, sel, got);
        kernels::scalar::xor_combine(cols, sel, ref_scalar);
        CHECK(got == ref_scalar);
        CHECK(got == reference_xor(cols, sel));
      }
      std::vector<std::uint64_t> in(n);
      for (auto& v : in) v = rng() & rng();
      if (n > 0) in[0] = ~std::uint64_t{0};
      std::vector<std::uint32_t> got(n), ref(n);
      kernels::popcount(in, got);
      kernels::scalar::popcount(in, ref);
      CHECK(got == ref);
      for (std::size_t i = 0; i < n; ++i) CHECK(ref[i] == static_cast<std::uint32_t>(std::popcount(in[i])));
    }
  }
}
