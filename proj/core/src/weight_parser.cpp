#include <cctype>

#include "ehrwt/errors.hpp"
#include "ehrwt/weight_poly.hpp"

namespace ehrwt {

namespace {

class WeightParser {
 public:
  WeightParser(std::string_view text, std::size_t vars) : text_(text), vars_(vars) {}

  WeightPoly parse() {
    WeightPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Consumes '+' or '-' (ASCII or U+2212) and reports which.
  bool sign(bool& negative) {
    skip_space();
    if (pos_ >= text_.size()) return false;
    if (text_[pos_] == '+' || text_[pos_] == '-') {
      negative = text_[pos_] == '-';
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      negative = true;
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer unsigned_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned exponent() {
    const std::size_t at = pos_;
    const Integer e = unsigned_integer();
    if (e > kMaxWeightExponent) {
      pos_ = at;
      fail("exponent exceeds " + std::to_string(kMaxWeightExponent));
    }
    return static_cast<unsigned>(e.get_ui());
  }

  WeightPoly expr() {
    bool negative = false;
    const bool leading = sign(negative);
    WeightPoly acc = term();
    if (leading && negative) acc *= -1;
    while (sign(negative)) {
      WeightPoly rhs = term();
      if (negative) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  WeightPoly term() {
    WeightPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  WeightPoly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WeightPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) return inner.pow(exponent());
      return inner;
    }
    if (c == 't') {
      const std::size_t at = pos_++;
      const Integer index = unsigned_integer();
      if (index < 1 || index > vars_) {
        pos_ = at;
        fail("variable t" + index.get_str() + " out of range 1.." + std::to_string(vars_));
      }
      WeightPoly v = WeightPoly::variable(vars_, index.get_ui() - 1);
      if (accept('^')) return v.pow(exponent());
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = unsigned_integer();
      Integer den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = unsigned_integer();
        if (den == 0) {
          pos_ = at;
          fail("division by zero");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return WeightPoly::constant(vars_, q);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t vars_;
  std::size_t pos_ = 0;
};

}  // namespace

WeightPoly parse_weight(std::string_view text, std::size_t vars) {
  return WeightParser(text, vars).parse();
}

}  // namespace ehrwt
