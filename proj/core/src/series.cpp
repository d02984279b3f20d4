#include "ehrwt/series.hpp"

namespace ehrwt {

Integer eulerian(unsigned d, unsigned k) {
  if (k > d) return 0;
  if (d == 0) return 1;
  Integer sum = 0;
  Integer power;
  for (unsigned j = 0; j <= k; ++j) {
    mpz_ui_pow_ui(power.get_mpz_t(), k - j, d);
    const Integer term = binomial(d + 1, j) * power;
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

RationalGF cube_series(unsigned d) {
  if (d == 0) return RationalGF(UniPoly{1}, 1);
  std::vector<Rational> h(d);
  for (unsigned k = 1; k <= d; ++k) h[k - 1] = Rational(eulerian(d, k));
  return RationalGF(UniPoly(std::move(h)), d + 1);
}

RationalGF gf_of_polynomial(const UniPoly& g) {
  if (g.is_zero()) return {};
  const unsigned r = static_cast<unsigned>(g.degree());
  const UniPoly one_minus_x{1, -1};
  const UniPoly x{0, 1};

  // Every summand is brought over (1-x)^{r+1}; F_{C_i} has (1-x)^{i+1}.
  auto lift = [&](UniPoly p, unsigned from) {
    for (unsigned e = from; e < r + 1; ++e) p = p * one_minus_x;
    return p;
  };

  UniPoly numerator = lift(UniPoly::constant(g.coeff(0)), 1);
  for (unsigned i = 1; i <= r; ++i) {
    if (g.coeff(i) == 0) continue;
    const RationalGF cube = cube_series(i);
    numerator += lift(x * cube.numerator() * g.coeff(i), cube.denom_power());
  }
  return RationalGF(std::move(numerator), r + 1);
}

}  // namespace ehrwt
