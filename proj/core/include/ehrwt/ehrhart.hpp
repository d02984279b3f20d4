#pragma once

#include <span>
#include <vector>

#include "ehrwt/graph.hpp"
#include "ehrwt/polytope.hpp"
#include "ehrwt/rational_gf.hpp"
#include "ehrwt/unipoly.hpp"
#include "ehrwt/weight_poly.hpp"

namespace ehrwt {

// sum of w(a) over a in nP ∩ Z^s.
Rational weighted_sum(const LatticePolytope& polytope, const WeightPoly& weight,
                      unsigned long n);

/// Weighted Ehrhart polynomial E_P^w.
///
/// Interpolates weighted_sum at n = 1..d+p+1 (d = dim P, p = deg w) and
/// checks the result against direct sums at n = 0 and n = d+p+2. A failed
/// check throws ConsistencyError: the degree bound d+p always holds, so a
/// mismatch can only come from an enumeration bug.
UniPoly weighted_ehrhart_polynomial(const LatticePolytope& polytope,
                                    const WeightPoly& weight);

// E_P, additionally checked to have degree exactly dim P.
UniPoly ehrhart_polynomial(const LatticePolytope& polytope);

RationalGF weighted_series(const LatticePolytope& polytope,
                           const WeightPoly& weight);
RationalGF ehrhart_series(const LatticePolytope& polytope);

// P_w = conv{(v_i, 0), (v_i, w(v_i))} in Z^{s+1}, duplicates dropped.
// Requires vertices in N^s and a non-zero linear w with w(e_i) in N.
LatticePolytope linear_lift(const LatticePolytope& polytope,
                            const WeightPoly& weight);

struct AffineLiftResult {
  LatticePolytope lift;      // Q1 = conv{(v_i,0), (v_i, C v_i)}
  UniPoly lift_polynomial;   // E_{Q1}
  UniPoly base_polynomial;   // E_P
  UniPoly weighted;          // E_{Q1} + (b - 1) E_P
};

// E_P^w for w(x) = C x + b through the lattice-point count of Q1.
// Requires vertices in N^s, C != 0 and every entry of C in N.
AffineLiftResult weighted_by_affine_lift(const LatticePolytope& polytope,
                                         std::span<const Rational> row,
                                         const Rational& offset);

// s - c_0 - 1 + deg(w) for the edge polytope of a graph without isolated
// vertices. Throws InputError unless w is a monomial.
unsigned predicted_degree(const Graph& graph, const WeightPoly& weight);

struct IntegralResult {
  Rational value;
  // The n^(s+p) coefficient vanished although w >= 0 was asserted.
  bool vanishing_leading = false;
};

// Coefficient of n^(s+p) in E_P^w, i.e. the integral of w over P.
// Requires P full-dimensional and w homogeneous (w >= 0 on P is taken on
// trust).
IntegralResult integral_leading(const LatticePolytope& polytope,
                                const WeightPoly& weight);

struct RootVanishing {
  long root;
  Rational weighted_value;  // E_P^w(root)
  bool vanishes;
};

// Negative integer roots r of E_P in [-(s+p), -1], each with E_P^w(r).
// Requires P full-dimensional and w homogeneous.
std::vector<RootVanishing> check_negative_root_vanishing(
    const LatticePolytope& polytope, const WeightPoly& weight);

struct ReciprocityRow {
  unsigned long n;
  Rational interior_sum;      // sum of w over n relint(P) ∩ Z^s
  Rational reciprocal_value;  // (-1)^(s+p) E_P^w(-n)
  bool holds;
};

std::vector<ReciprocityRow> reciprocity_check(const LatticePolytope& polytope,
                                              const WeightPoly& weight,
                                              unsigned long n_max);

// w >= 0 at every lattice point of scale * P. A cheap necessary check for
// the nonnegativity hypotheses, not a certificate.
bool spot_check_nonnegative(const LatticePolytope& polytope,
                            const WeightPoly& weight, unsigned long scale = 3);

}  // namespace ehrwt
