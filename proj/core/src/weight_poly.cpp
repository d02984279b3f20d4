#include "ehrwt/weight_poly.hpp"

#include <algorithm>
#include <numeric>

#include "ehrwt/errors.hpp"

namespace ehrwt {

namespace {

unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

template <typename Scalar>
Rational evaluate(const std::map<Exponent, Rational>& terms, std::size_t vars,
                  std::span<const Scalar> point) {
  if (point.size() != vars) {
    throw InputError("weight over " + std::to_string(vars) +
                     " variables evaluated at a point of length " +
                     std::to_string(point.size()));
  }
  Rational sum = 0;
  for (const auto& [exponent, coeff] : terms) {
    Rational value = coeff;
    for (std::size_t i = 0; i < vars && value != 0; ++i) {
      for (unsigned k = 0; k < exponent[i]; ++k) value *= point[i];
    }
    sum += value;
  }
  return sum;
}

}  // namespace

WeightPoly WeightPoly::constant(std::size_t vars, const Rational& c) {
  WeightPoly w(vars);
  w.add_term(Exponent(vars, 0), c);
  return w;
}

WeightPoly WeightPoly::variable(std::size_t vars, std::size_t index) {
  if (index >= vars) throw InputError("variable index out of range");
  Exponent e(vars, 0);
  e[index] = 1;
  return monomial(1, std::move(e));
}

WeightPoly WeightPoly::monomial(const Rational& c, Exponent exponent) {
  WeightPoly w(exponent.size());
  w.add_term(exponent, c);
  return w;
}

WeightPoly WeightPoly::affine(std::span<const Rational> row, const Rational& offset) {
  WeightPoly w = constant(row.size(), offset);
  for (std::size_t i = 0; i < row.size(); ++i) {
    w += variable(row.size(), i) * row[i];
  }
  return w;
}

void WeightPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned WeightPoly::degree() const {
  unsigned p = 0;
  for (const auto& [e, c] : terms_) p = std::max(p, total(e));
  return p;
}

Rational WeightPoly::constant_term() const {
  auto it = terms_.find(Exponent(vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational WeightPoly::linear_coeff(std::size_t index) const {
  Exponent e(vars_, 0);
  e.at(index) = 1;
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool WeightPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned p = total(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total(e) != p) return false;
  }
  return true;
}

bool WeightPoly::is_monomial() const { return terms_.size() == 1; }

bool WeightPoly::is_affine() const { return degree() <= 1; }

Rational WeightPoly::operator()(std::span<const Integer> point) const {
  return evaluate(terms_, vars_, point);
}

Rational WeightPoly::operator()(std::span<const Rational> point) const {
  return evaluate(terms_, vars_, point);
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& other) {
  if (other.vars_ != vars_) throw InputError("weights over different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& other) {
  if (other.vars_ != vars_) throw InputError("weights over different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

WeightPoly& WeightPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, a] : terms_) a *= c;
  return *this;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
  if (a.vars_ != b.vars_) throw InputError("weights over different variable counts");
  WeightPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

WeightPoly WeightPoly::pow(unsigned exponent) const {
  WeightPoly result = constant(vars_, 1);
  WeightPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string WeightPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Graded: higher total degree first, then the map's reverse lex order.
  std::vector<const std::pair<const Exponent, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    const unsigned dx = total(x->first), dy = total(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });

  std::string out;
  bool first = true;
  for (const auto* term : order) {
    const Rational& c = term->second;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Rational magnitude = abs(c);
    std::string body;
    for (std::size_t i = 0; i < vars_; ++i) {
      const unsigned k = term->first[i];
      if (k == 0) continue;
      if (!body.empty()) body += "*";
      body += "t" + std::to_string(i + 1);
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (body.empty()) {
      out += ehrwt::to_string(magnitude);
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += ehrwt::to_string(magnitude) + "*" + body;
    }
  }
  return out;
}

}  // namespace ehrwt
