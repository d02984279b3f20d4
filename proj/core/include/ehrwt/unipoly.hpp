#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ehrwt/rational.hpp"

namespace ehrwt {

/// Univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored in ascending order of powers and normalized so
/// that the last stored coefficient is non-zero. The zero polynomial has no
/// coefficients and degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, unsigned power);
  // n - root
  static UniPoly linear_factor(const Rational& root);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of n^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Quotient q with *this == (var - 1) * q; requires (*this)(1) == 0.
  UniPoly divide_by_x_minus_one() const;

  // Descending "c_k*n^k + ... + c_0" with exact rationals, "0" for zero.
  std::string to_string(char var = 'n') const;
  // Descending, no spaces around operators: "x^3+4*x^2+x".
  std::string to_compact_string(char var = 'x') const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace ehrwt
