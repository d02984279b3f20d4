#include "ehrwt/rational_gf.hpp"

#include <algorithm>

namespace ehrwt {

namespace {

UniPoly one_minus_x_pow(unsigned k) {
  std::vector<Rational> c(k + 1);
  for (unsigned i = 0; i <= k; ++i) {
    c[i] = Rational(binomial(k, i)) * ((i % 2 == 0) ? 1 : -1);
  }
  return UniPoly(std::move(c));
}

}  // namespace

RationalGF::RationalGF(UniPoly numerator, unsigned denom_power)
    : numerator_(std::move(numerator)), denom_power_(denom_power) {
  canonicalize();
}

void RationalGF::canonicalize() {
  if (numerator_.is_zero()) {
    denom_power_ = 0;
    return;
  }
  while (denom_power_ > 0 && numerator_(1) == 0) {
    numerator_ = -numerator_.divide_by_x_minus_one();
    --denom_power_;
  }
}

UniPoly RationalGF::numerator_over(unsigned power) const {
  return numerator_ * one_minus_x_pow(power - denom_power_);
}

std::vector<Rational> RationalGF::expand(std::size_t last) const {
  std::vector<Rational> out(last + 1);
  const auto& h = numerator_.coeffs();
  for (std::size_t n = 0; n <= last; ++n) {
    Rational sum = 0;
    for (std::size_t j = 0; j < h.size() && j <= n; ++j) {
      if (denom_power_ == 0) {
        if (j == n) sum += h[j];
        continue;
      }
      // [x^m] (1-x)^{-D} = C(m+D-1, D-1)
      const long m = static_cast<long>(n - j);
      sum += h[j] * Rational(binomial(m + denom_power_ - 1, denom_power_ - 1));
    }
    out[n] = sum;
  }
  return out;
}

RationalGF& RationalGF::operator+=(const RationalGF& other) {
  const unsigned power = std::max(denom_power_, other.denom_power_);
  *this = RationalGF(numerator_over(power) + other.numerator_over(power), power);
  return *this;
}

RationalGF& RationalGF::operator-=(const RationalGF& other) {
  const unsigned power = std::max(denom_power_, other.denom_power_);
  *this = RationalGF(numerator_over(power) - other.numerator_over(power), power);
  return *this;
}

RationalGF& RationalGF::operator*=(const Rational& c) {
  *this = RationalGF(numerator_ * c, denom_power_);
  return *this;
}

std::string RationalGF::to_string() const {
  std::string num = numerator_.to_compact_string('x');
  if (denom_power_ == 0) return num;
  const auto nonzero = std::count_if(numerator_.coeffs().begin(), numerator_.coeffs().end(),
                                     [](const Rational& c) { return c != 0; });
  if (nonzero > 1) num = "(" + num + ")";
  std::string den = "(1-x)";
  if (denom_power_ > 1) den += "^" + std::to_string(denom_power_);
  return num + "/" + den;
}

}  // namespace ehrwt
