#pragma once

#include "ehrwt/rational_gf.hpp"
#include "ehrwt/unipoly.hpp"

namespace ehrwt {

// Eulerian number A(d, k) via the alternating binomial sum
//   A(d,k) = sum_{j=0}^{k} (-1)^j C(d+1, j) (k-j)^d.
// Zero for k > d; A(0, 0) = 1.
Integer eulerian(unsigned d, unsigned k);

// Ehrhart series of the unit cube [0,1]^d:
//   sum_{k=1}^{d} A(d,k) x^{k-1} / (1-x)^{d+1},  and 1/(1-x) for d = 0.
RationalGF cube_series(unsigned d);

// sum_{n>=0} g(n) x^n, assembled as b_0 F_{C_0} + sum_i b_i x F_{C_i}.
RationalGF gf_of_polynomial(const UniPoly& g);

}  // namespace ehrwt
