#pragma once

// Dense bit-packed linear algebra over Z/2Z.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcc {

class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t length);

  // "10110" -> bit 0 set, bit 1 clear, ...
  static Gf2Vector from_string(std::string_view bits);
  static Gf2Vector from_indices(std::size_t length, std::span<const std::size_t> indices);
  static Gf2Vector from_mask(std::size_t length, std::uint64_t mask);

  std::size_t size() const noexcept { return length_; }
  bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t weight() const noexcept;
  bool any() const noexcept;
  std::vector<std::size_t> indices() const;

  // Low 64 bits; the vector must have length <= 64.
  std::uint64_t mask() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  Gf2Vector& operator^=(const Gf2Vector& other);
  Gf2Vector& operator&=(const Gf2Vector& other);
  Gf2Vector& operator|=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
  friend Gf2Vector operator&(Gf2Vector a, const Gf2Vector& b) { return a &= b; }
  friend Gf2Vector operator|(Gf2Vector a, const Gf2Vector& b) { return a |= b; }
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

  // Parity of the dot product.
  bool dot(const Gf2Vector& other) const;

  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bit-string order: the first differing position decides, a clear bit sorts
// first ("00110" < "10000").
bool lex_less(const Gf2Vector& a, const Gf2Vector& b);

// Orders by weight, then lex_less.
bool weight_lex_less(const Gf2Vector& a, const Gf2Vector& b);

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  // One string per row, e.g. {"110", "011"}.
  static Gf2Matrix from_rows(std::span<const std::string> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }
  const Gf2Vector& row(std::size_t r) const noexcept { return rows_[r]; }
  Gf2Vector column(std::size_t c) const;

  Gf2Vector multiply(const Gf2Vector& x) const;
  Gf2Matrix multiply(const Gf2Matrix& other) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  // 0/1 grid, one row per line.
  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> rows_;
};

struct AffineSolution {
  Gf2Vector particular;
  std::vector<Gf2Vector> kernel_basis;

  std::size_t kernel_dimension() const noexcept { return kernel_basis.size(); }
  // Every member of particular + span(kernel_basis), in Gray-code order.
  std::vector<Gf2Vector> enumerate() const;
};

std::size_t rank(const Gf2Matrix& m);

// Throws Error(Inconsistent) when b is outside the column space. Free
// variables are taken in ascending column order and set to zero in the
// particular solution; the kernel basis has one vector per free column.
AffineSolution solve_affine(const Gf2Matrix& m, const Gf2Vector& b);

std::vector<Gf2Vector> kernel(const Gf2Matrix& m);

inline constexpr std::size_t kMaxEnumeratedKernel = 20;

// Minimum-weight member of the coset, ties broken by lex_less. Throws
// Error(KernelTooLarge) above kMaxEnumeratedKernel basis vectors.
Gf2Vector min_weight_in_coset(const AffineSolution& s);

// Columns listed in `cols` are removed; the rest keep their relative order.
Gf2Matrix delete_columns(const Gf2Matrix& m, std::span<const std::size_t> cols);

// Throws Error(Singular) for rank-deficient input and
// Error(DimensionMismatch) for non-square input.
Gf2Matrix invert_square(const Gf2Matrix& m);

}  // namespace rcc
