#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace trigrid {

/// Integer Laurent polynomial in one variable (A). Zero coefficients are
/// never stored.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Coefficient constant);
  static LaurentPolynomial monomial(Coefficient c, int exponent);

  Coefficient coefficient(int exponent) const;
  const std::map<int, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(int k) const;
  /// Substitutes A -> A^-1.
  LaurentPolynomial mirrored() const;

  /// e.g. "-A^-4 + A^-12 - A^-16"; "0" for zero.
  std::string to_string(const char* var = "A") const;

 private:
  void add_term(int exponent, Coefficient c);
  std::map<int, Coefficient> terms_;
};

/// -A^2 - A^-2, the loop value.
LaurentPolynomial loop_value();

}  // namespace trigrid
