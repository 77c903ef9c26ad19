#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace rcc {

// Single-variable Laurent polynomial with exact 64-bit integer coefficients.
// Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::int64_t constant);
  static LaurentPolynomial monomial(std::int64_t coefficient, int exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned n) const;

  // x -> x^-1
  LaurentPolynomial inverted() const;
  // x^e -> x^(e / divisor); throws std::domain_error if some exponent is not a multiple.
  LaurentPolynomial divide_exponents(int divisor) const;
  // Sum of coefficients times (-1)^exponent, i.e. the value at x = -1.
  std::int64_t at_minus_one() const;

  std::string to_string(std::string_view var = "t") const;

 private:
  void add_term(int exponent, std::int64_t coefficient);
  Terms terms_;
};

}  // namespace rcc
