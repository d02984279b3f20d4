#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehrwt/rational.hpp"

namespace ehrwt {

using Exponent = std::vector<unsigned>;

/// Multivariate polynomial in t1..ts with exact rational coefficients, kept
/// in expanded normal form (no zero coefficients stored).
class WeightPoly {
 public:
  explicit WeightPoly(std::size_t vars = 0) : vars_(vars) {}

  static WeightPoly constant(std::size_t vars, const Rational& c);
  // t_{index+1}, zero-based index.
  static WeightPoly variable(std::size_t vars, std::size_t index);
  static WeightPoly monomial(const Rational& c, Exponent exponent);
  // sum_i row[i] * t_{i+1} + offset
  static WeightPoly affine(std::span<const Rational> row,
                           const Rational& offset = 0);

  std::size_t vars() const noexcept { return vars_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Total degree p; 0 for constants and for the zero polynomial.
  unsigned degree() const;
  Rational constant_term() const;
  // Coefficient of t_{index+1} (the degree-one part).
  Rational linear_coeff(std::size_t index) const;

  bool is_homogeneous() const;
  bool is_monomial() const;
  // Every term has total degree <= 1.
  bool is_affine() const;
  // Affine with zero constant term.
  bool is_linear() const { return is_affine() && constant_term() == 0; }

  Rational operator()(std::span<const Integer> point) const;
  Rational operator()(std::span<const Rational> point) const;

  WeightPoly& operator+=(const WeightPoly& other);
  WeightPoly& operator-=(const WeightPoly& other);
  WeightPoly& operator*=(const Rational& c);

  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator*(WeightPoly a, const Rational& c) { return a *= c; }
  friend WeightPoly operator*(const Rational& c, WeightPoly a) { return a *= c; }
  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
  WeightPoly pow(unsigned exponent) const;

  friend bool operator==(const WeightPoly& a, const WeightPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // "2/5*t1 - 6/25*t2"; graded descending; parseable by parse_weight.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);

  std::size_t vars_;
  std::map<Exponent, Rational> terms_;
};

inline constexpr unsigned kMaxWeightExponent = 64;

/// Parses a weight expression over t1..t_vars.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | var ('^' uint)? | '(' expr ')' ('^' uint)?
///   var    := 't' uint        (1 <= index <= vars)
///   rational := int ('/' uint)?
///
/// A leading unary minus is accepted on terms. Exponents above
/// kMaxWeightExponent are rejected. Throws ParseError with the offending
/// byte offset.
WeightPoly parse_weight(std::string_view text, std::size_t vars);

}  // namespace ehrwt
