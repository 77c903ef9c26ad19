#include "rcc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "rcc/error.hpp"
#include "rcc/kernels.hpp"

namespace rcc {
namespace {

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

void require_same_length(const Gf2Vector& a, const Gf2Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> eliminate(std::vector<Gf2Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Lowest differing bit decides; a clear bit there sorts first.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

Gf2Vector min_weight_small(const AffineSolution& s) {
  const std::size_t n = s.particular.size();
  const std::size_t k = s.kernel_basis.size();
  const std::size_t count = std::size_t{1} << k;
  std::vector<std::uint64_t> coset(count);
  std::uint64_t cur = s.particular.mask();
  coset[0] = cur;
  for (std::size_t i = 1; i < count; ++i) {
    cur ^= s.kernel_basis[static_cast<std::size_t>(std::countr_zero(i))].mask();
    coset[i] = cur;
  }
  std::vector<std::uint32_t> weights(count);
  kernels::popcount(coset, weights);
  std::size_t best = 0;
  for (std::size_t i = 1; i < count; ++i) {
    if (weights[i] < weights[best] || (weights[i] == weights[best] && mask_lex_less(coset[i], coset[best])))
      best = i;
  }
  return Gf2Vector::from_mask(n, coset[best]);
}

}  // namespace

Gf2Vector::Gf2Vector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw Error(ErrorCode::MalformedToken, "bit string contains '" + std::string(1, bits[i]) + "'");
  }
  return v;
}

Gf2Vector Gf2Vector::from_indices(std::size_t length, std::span<const std::size_t> indices) {
  Gf2Vector v(length);
  for (std::size_t i : indices) {
    if (i >= length) throw Error(ErrorCode::DimensionMismatch, "index " + std::to_string(i) + " out of range");
    v.set(i);
  }
  return v;
}

Gf2Vector Gf2Vector::from_mask(std::size_t length, std::uint64_t mask) {
  if (length > 64) throw Error(ErrorCode::DimensionMismatch, "mask vectors hold at most 64 bits");
  Gf2Vector v(length);
  if (length > 0) v.words_[0] = length == 64 ? mask : mask & ((std::uint64_t{1} << length) - 1);
  return v;
}

void Gf2Vector::set(std::size_t i, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= bit;
  else
    words_[i / 64] &= ~bit;
}

std::size_t Gf2Vector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool Gf2Vector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::vector<std::size_t> Gf2Vector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t Gf2Vector::mask() const {
  if (length_ > 64) throw Error(ErrorCode::DimensionMismatch, "vector longer than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Gf2Vector& Gf2Vector::operator&=(const Gf2Vector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Gf2Vector& Gf2Vector::operator|=(const Gf2Vector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  require_same_length(*this, other);
  unsigned parity = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) parity ^= std::popcount(words_[i] & other.words_[i]) & 1U;
  return parity != 0;
}

std::string Gf2Vector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool lex_less(const Gf2Vector& a, const Gf2Vector& b) {
  require_same_length(a, b);
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wa[i] != wb[i]) return mask_lex_less(wa[i], wb[i]);
  return false;
}

bool weight_lex_less(const Gf2Vector& a, const Gf2Vector& b) {
  const auto wa = a.weight();
  const auto wb = b.weight();
  if (wa != wb) return wa < wb;
  return lex_less(a, b);
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::span<const std::string> rows) {
  if (rows.empty()) return {};
  Gf2Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    m.rows_[r] = Gf2Vector::from_string(rows[r]);
  }
  return m;
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
  Gf2Vector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
  return v;
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix has " + std::to_string(cols_) + " columns, vector length " + std::to_string(x.size()));
  Gf2Vector y(rows());
  for (std::size_t r = 0; r < rows(); ++r) y.set(r, rows_[r].dot(x));
  return y;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
  if (other.rows() != cols_) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  Gf2Matrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t k : rows_[r].indices()) out.rows_[r] ^= other.rows_[k];
  return out;
}

std::string Gf2Matrix::to_string() const {
  std::ostringstream os;
  for (const auto& r : rows_) os << r.to_string() << '\n';
  return os.str();
}

std::vector<Gf2Vector> AffineSolution::enumerate() const {
  const std::size_t count = std::size_t{1} << kernel_basis.size();
  std::vector<Gf2Vector> out;
  out.reserve(count);
  Gf2Vector cur = particular;
  out.push_back(cur);
  for (std::size_t i = 1; i < count; ++i) {
    cur ^= kernel_basis[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(cur);
  }
  return out;
}

std::size_t rank(const Gf2Matrix& m) {
  std::vector<Gf2Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return eliminate(rows, m.cols()).size();
}

AffineSolution solve_affine(const Gf2Matrix& m, const Gf2Vector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "matrix has " + std::to_string(m.rows()) + " rows, right-hand side length " + std::to_string(b.size()));
  const std::size_t n = m.cols();
  // augmented column sits at index n
  std::vector<Gf2Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Gf2Vector aug(n + 1);
    for (std::size_t c : m.row(r).indices()) aug.set(c);
    aug.set(n, b.get(r));
    rows.push_back(std::move(aug));
  }
  const auto pivots = eliminate(rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) throw Error(ErrorCode::Inconsistent, "right-hand side outside the column space");

  AffineSolution sol{Gf2Vector(n), {}};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    sol.particular.set(pivots[i], rows[i].get(n));
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector k(n);
    k.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i].get(f)) k.set(pivots[i]);
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

std::vector<Gf2Vector> kernel(const Gf2Matrix& m) { return solve_affine(m, Gf2Vector(m.rows())).kernel_basis; }

Gf2Vector min_weight_in_coset(const AffineSolution& s) {
  if (s.kernel_basis.size() > kMaxEnumeratedKernel)
    throw Error(ErrorCode::KernelTooLarge, "kernel dimension " + std::to_string(s.kernel_basis.size()) + " exceeds " +
                                               std::to_string(kMaxEnumeratedKernel));
  if (s.particular.size() <= 64) return min_weight_small(s);

  Gf2Vector best = s.particular;
  Gf2Vector cur = s.particular;
  const std::size_t count = std::size_t{1} << s.kernel_basis.size();
  for (std::size_t i = 1; i < count; ++i) {
    cur ^= s.kernel_basis[static_cast<std::size_t>(std::countr_zero(i))];
    if (weight_lex_less(cur, best)) best = cur;
  }
  return best;
}

Gf2Matrix delete_columns(const Gf2Matrix& m, std::span<const std::size_t> cols) {
  std::vector<bool> drop(m.cols(), false);
  for (std::size_t c : cols) {
    if (c >= m.cols()) throw Error(ErrorCode::DimensionMismatch, "column " + std::to_string(c) + " out of range");
    drop[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!drop[c]) keep.push_back(c);
  Gf2Matrix out(m.rows(), keep.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (m.get(r, keep[j])) out.set(r, j);
  return out;
}

Gf2Matrix invert_square(const Gf2Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, std::to_string(n) + "x" + std::to_string(m.cols()) + " is not square");
  std::vector<Gf2Vector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Gf2Vector aug(2 * n);
    for (std::size_t c : m.row(r).indices()) aug.set(c);
    aug.set(n + r);
    rows.push_back(std::move(aug));
  }
  const auto pivots = eliminate(rows, n);
  if (pivots.size() < n) throw Error(ErrorCode::Singular, "rank " + std::to_string(pivots.size()) + " < " + std::to_string(n));
  Gf2Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rows[r].get(n + c)) inv.set(r, c);
  return inv;
}

}  // namespace rcc
