#include "ehrwt/ehrhart.hpp"

#include <algorithm>
#include <future>

#include "ehrwt/errors.hpp"
#include "ehrwt/interpolate.hpp"
#include "ehrwt/series.hpp"

namespace ehrwt {

namespace {

void require_matching_vars(const LatticePolytope& polytope, const WeightPoly& weight) {
  if (weight.vars() != polytope.ambient_dim()) {
    throw InputError("weight has " + std::to_string(weight.vars()) +
                     " variables but the polytope lives in dimension " +
                     std::to_string(polytope.ambient_dim()));
  }
}

void require_full_dimensional(const LatticePolytope& polytope, const char* what) {
  if (!polytope.is_full_dimensional()) {
    throw InputError(std::string(what) + " needs a full-dimensional polytope (dim " +
                     std::to_string(polytope.dim()) + " < " +
                     std::to_string(polytope.ambient_dim()) + ")");
  }
}

void require_homogeneous(const WeightPoly& weight, const char* what) {
  if (!weight.is_homogeneous()) {
    throw InputError(std::string(what) + " needs a homogeneous weight");
  }
}

// Checks the hypotheses shared by the lift constructions and returns the
// linear part C as integers.
IntVector lift_row(const LatticePolytope& polytope, std::span<const Rational> row) {
  if (!polytope.has_nonnegative_vertices()) {
    throw InputError("lifts need vertices in N^s");
  }
  if (row.size() != polytope.ambient_dim()) {
    throw InputError("linear weight has the wrong number of coefficients");
  }
  IntVector out;
  bool nonzero = false;
  for (const auto& c : row) {
    if (!is_integer(c) || c < 0) {
      throw InputError("lifts need w(e_i) in N; got coefficient " + to_string(c));
    }
    nonzero = nonzero || c != 0;
    out.push_back(c.get_num());
  }
  if (!nonzero) throw InputError("lifts need a non-zero linear weight");
  return out;
}

LatticePolytope lift_by_row(const LatticePolytope& polytope, const IntVector& row) {
  std::vector<IntVector> lifted;
  auto push = [&](IntVector v) {
    if (std::find(lifted.begin(), lifted.end(), v) == lifted.end()) lifted.push_back(std::move(v));
  };
  for (const auto& v : polytope.vertices()) {
    Integer height = 0;
    for (std::size_t i = 0; i < v.size(); ++i) height += row[i] * v[i];
    IntVector base = v;
    base.push_back(0);
    push(base);
    base.back() = height;
    push(std::move(base));
  }
  return LatticePolytope(std::move(lifted));
}

}  // namespace

Rational weighted_sum(const LatticePolytope& polytope, const WeightPoly& weight, unsigned long n) {
  require_matching_vars(polytope, weight);
  Rational sum = 0;
  for_each_lattice_point(polytope, n, [&](std::span<const Integer> a) { sum += weight(a); });
  return sum;
}

UniPoly weighted_ehrhart_polynomial(const LatticePolytope& polytope, const WeightPoly& weight) {
  require_matching_vars(polytope, weight);
  if (weight.is_zero()) return {};
  const unsigned long bound = static_cast<unsigned long>(polytope.dim()) + weight.degree();

  // n = 1..bound+1 for the fit, then n = 0 and n = bound+2 as checks.
  std::vector<std::future<Rational>> pending;
  for (unsigned long n = 0; n <= bound + 2; ++n) {
    pending.push_back(std::async(std::launch::async,
                                 [&polytope, &weight, n] { return weighted_sum(polytope, weight, n); }));
  }
  std::vector<Rational> values;
  for (auto& f : pending) values.push_back(f.get());

  std::vector<Sample> samples;
  for (unsigned long n = 1; n <= bound + 1; ++n) {
    samples.push_back(Sample{Rational(static_cast<long>(n)), values[n]});
  }
  UniPoly e = lagrange_interpolate(samples);

  for (unsigned long n : {0ul, bound + 2}) {
    if (e(Rational(static_cast<long>(n))) != values[n]) {
      throw ConsistencyError("interpolated weighted Ehrhart polynomial " + e.to_string() +
                             " disagrees with the direct sum at n = " + std::to_string(n));
    }
  }
  return e;
}

UniPoly ehrhart_polynomial(const LatticePolytope& polytope) {
  UniPoly e = weighted_ehrhart_polynomial(polytope,
                                          WeightPoly::constant(polytope.ambient_dim(), 1));
  if (e.degree() != polytope.dim()) {
    throw ConsistencyError("Ehrhart polynomial " + e.to_string() + " has degree " +
                           std::to_string(e.degree()) + ", expected " +
                           std::to_string(polytope.dim()));
  }
  return e;
}

RationalGF weighted_series(const LatticePolytope& polytope, const WeightPoly& weight) {
  return gf_of_polynomial(weighted_ehrhart_polynomial(polytope, weight));
}

RationalGF ehrhart_series(const LatticePolytope& polytope) {
  return gf_of_polynomial(ehrhart_polynomial(polytope));
}

LatticePolytope linear_lift(const LatticePolytope& polytope, const WeightPoly& weight) {
  require_matching_vars(polytope, weight);
  if (!weight.is_affine()) throw InputError("linear lift needs a linear weight");
  if (weight.constant_term() != 0) {
    throw InputError("linear lift needs a homogeneous weight; use the affine lift for w = Cx + b");
  }
  RatVector row;
  for (std::size_t i = 0; i < polytope.ambient_dim(); ++i) row.push_back(weight.linear_coeff(i));
  return lift_by_row(polytope, lift_row(polytope, row));
}

AffineLiftResult weighted_by_affine_lift(const LatticePolytope& polytope,
                                         std::span<const Rational> row, const Rational& offset) {
  LatticePolytope lift = lift_by_row(polytope, lift_row(polytope, row));
  UniPoly lifted = ehrhart_polynomial(lift);
  UniPoly base = ehrhart_polynomial(polytope);
  UniPoly weighted = lifted + base * (offset - 1);
  return AffineLiftResult{std::move(lift), std::move(lifted), std::move(base), std::move(weighted)};
}

unsigned predicted_degree(const Graph& graph, const WeightPoly& weight) {
  if (!graph.isolated_vertices().empty()) {
    throw InputError("degree formula needs a graph without isolated vertices");
  }
  if (weight.vars() != graph.vertex_count()) {
    throw InputError("weight and graph disagree on the number of variables");
  }
  if (!weight.is_monomial()) throw InputError("degree formula needs a monomial weight");
  const std::size_t c0 = bipartite_components(graph);
  return static_cast<unsigned>(graph.vertex_count() - c0 - 1 + weight.degree());
}

IntegralResult integral_leading(const LatticePolytope& polytope, const WeightPoly& weight) {
  require_matching_vars(polytope, weight);
  require_full_dimensional(polytope, "integral via leading coefficient");
  require_homogeneous(weight, "integral via leading coefficient");
  const UniPoly e = weighted_ehrhart_polynomial(polytope, weight);
  IntegralResult r;
  r.value = e.coeff(polytope.ambient_dim() + weight.degree());
  r.vanishing_leading = r.value == 0 && !weight.is_zero();
  return r;
}

std::vector<RootVanishing> check_negative_root_vanishing(const LatticePolytope& polytope,
                                                         const WeightPoly& weight) {
  require_matching_vars(polytope, weight);
  require_full_dimensional(polytope, "negative-root vanishing");
  require_homogeneous(weight, "negative-root vanishing");
  const UniPoly e = ehrhart_polynomial(polytope);
  const UniPoly ew = weighted_ehrhart_polynomial(polytope, weight);

  // Integer roots of the cleared polynomial divide its constant term E_P(0)
  // times the common denominator.
  Integer den = 1;
  for (const auto& c : e.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Integer constant = Rational(e.coeff(0) * den).get_num();

  std::vector<RootVanishing> out;
  const long window = static_cast<long>(polytope.ambient_dim() + weight.degree());
  for (long r = -1; r >= -window; --r) {
    if (constant != 0 && !mpz_divisible_ui_p(constant.get_mpz_t(), static_cast<unsigned long>(-r))) {
      continue;
    }
    if (e(Rational(r)) != 0) continue;
    const Rational value = ew(Rational(r));
    out.push_back(RootVanishing{r, value, value == 0});
  }
  return out;
}

std::vector<ReciprocityRow> reciprocity_check(const LatticePolytope& polytope,
                                              const WeightPoly& weight, unsigned long n_max) {
  require_matching_vars(polytope, weight);
  require_full_dimensional(polytope, "reciprocity check");
  require_homogeneous(weight, "reciprocity check");
  if (n_max < 1) throw InputError("reciprocity check needs n_max >= 1");
  const UniPoly ew = weighted_ehrhart_polynomial(polytope, weight);
  const bool negate = (polytope.ambient_dim() + weight.degree()) % 2 == 1;

  std::vector<ReciprocityRow> out;
  for (unsigned long n = 1; n <= n_max; ++n) {
    Rational interior = 0;
    for (const auto& a : interior_lattice_points(polytope, n)) interior += weight(a);
    Rational reciprocal = ew(Rational(-static_cast<long>(n)));
    if (negate) reciprocal = -reciprocal;
    out.push_back(ReciprocityRow{n, interior, reciprocal, interior == reciprocal});
  }
  return out;
}

bool spot_check_nonnegative(const LatticePolytope& polytope, const WeightPoly& weight,
                            unsigned long scale) {
  require_matching_vars(polytope, weight);
  bool ok = true;
  for_each_lattice_point(polytope, scale, [&](std::span<const Integer> a) {
    if (ok && weight(a) < 0) ok = false;
  });
  return ok;
}

}  // namespace ehrwt
