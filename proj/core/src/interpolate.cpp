#include "ehrwt/interpolate.hpp"

#include "ehrwt/errors.hpp"

namespace ehrwt {

UniPoly lagrange_interpolate(std::span<const Sample> samples) {
  if (samples.empty()) throw InputError("interpolation needs at least one sample");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].x == samples[j].x) {
        throw InputError("duplicate interpolation abscissa " + to_string(samples[i].x));
      }
    }
  }

  // master(n) = prod_k (n - x_k); each basis numerator is master / (n - x_j).
  UniPoly master{1};
  for (const auto& s : samples) master = master * UniPoly::linear_factor(s.x);
  const auto& m = master.coeffs();

  UniPoly result;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const Rational& xj = samples[j].x;
    std::vector<Rational> basis(m.size() - 1);
    Rational carry = 0;
    for (std::size_t i = m.size() - 1; i >= 1; --i) {
      carry = carry * xj + m[i];
      basis[i - 1] = carry;
    }
    Rational denom = 1;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      if (k != j) denom *= xj - samples[k].x;
    }
    result += UniPoly(std::move(basis)) * (samples[j].y / denom);
  }
  return result;
}

}  // namespace ehrwt
