#pragma once

#include <string>
#include <vector>

#include "ehrwt/unipoly.hpp"

namespace ehrwt {

/// A rational generating function numerator(x) / (1 - x)^denom_power.
///
/// Always canonical: factors of (1 - x) are cancelled from the numerator
/// while denom_power > 0, so numerator(1) != 0 unless the numerator is zero
/// or denom_power == 0. The zero function is stored as 0 / (1 - x)^0.
class RationalGF {
 public:
  RationalGF() = default;
  RationalGF(UniPoly numerator, unsigned denom_power);

  const UniPoly& numerator() const noexcept { return numerator_; }
  unsigned denom_power() const noexcept { return denom_power_; }

  // Taylor coefficients of x^0 .. x^last.
  std::vector<Rational> expand(std::size_t last) const;

  RationalGF& operator+=(const RationalGF& other);
  RationalGF& operator-=(const RationalGF& other);
  RationalGF& operator*=(const Rational& c);
  friend RationalGF operator+(RationalGF a, const RationalGF& b) { return a += b; }
  friend RationalGF operator-(RationalGF a, const RationalGF& b) { return a -= b; }
  friend RationalGF operator*(const Rational& c, RationalGF a) { return a *= c; }

  friend bool operator==(const RationalGF& a, const RationalGF& b) {
    return a.denom_power_ == b.denom_power_ && a.numerator_ == b.numerator_;
  }

  // "(x^3+4*x^2+x)/(1-x)^5", "1/(1-x)", "2/25*x/(1-x)^2" style.
  std::string to_string() const;

 private:
  void canonicalize();
  // Same function with the denominator raised to (1 - x)^power.
  UniPoly numerator_over(unsigned power) const;

  UniPoly numerator_;
  unsigned denom_power_ = 0;
};

}  // namespace ehrwt
