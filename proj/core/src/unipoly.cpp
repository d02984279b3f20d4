#include "ehrwt/unipoly.hpp"

#include <algorithm>

#include "ehrwt/errors.hpp"

namespace ehrwt {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  normalize();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly{c}; }

UniPoly UniPoly::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::linear_factor(const Rational& root) { return UniPoly{-root, 1}; }

void UniPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UniPoly::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly UniPoly::divide_by_x_minus_one() const {
  if ((*this)(1) != 0) {
    throw ConsistencyError("polynomial is not divisible by (x - 1)");
  }
  if (coeffs_.size() <= 1) return {};
  // Synthetic division by the root 1, from the top coefficient down.
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) {
    carry += coeffs_[i];
    q[i - 1] = carry;
  }
  return UniPoly(std::move(q));
}

namespace {

// "c*v^k" for a positive coefficient c.
std::string term_body(const Rational& abs_c, std::size_t k, char var) {
  std::string out;
  const bool unit = abs_c == 1;
  if (k == 0) return to_string(abs_c);
  if (!unit) out += to_string(abs_c) + "*";
  out += var;
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

std::string render(const std::vector<Rational>& coeffs, char var, bool spaced) {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else if (spaced) {
      out += negative ? " - " : " + ";
    } else {
      out += negative ? "-" : "+";
    }
    out += term_body(abs(c), k, var);
    first = false;
  }
  return out;
}

}  // namespace

std::string UniPoly::to_string(char var) const { return render(coeffs_, var, true); }

std::string UniPoly::to_compact_string(char var) const {
  return render(coeffs_, var, false);
}

}  // namespace ehrwt
