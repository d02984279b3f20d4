#pragma once

// Independent reference implementations used only by the tests. None of
// them touch the facet machinery: lattice points come from a bounding-box
// scan filtered by LP membership, Eulerian numbers from the recurrence.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "ehrwt/ehrhart.hpp"
#include "ehrwt/polytope.hpp"
#include "ehrwt/rational_gf.hpp"
#include "ehrwt/unipoly.hpp"
#include "ehrwt/weight_poly.hpp"

namespace ehrwt::testing {

// Ascending coefficients, e.g. poly({"0", "1/4"}) == n/4.
inline UniPoly poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(rational_from_string(s));
  return UniPoly(std::move(c));
}

inline RationalGF gf(std::initializer_list<const char*> numerator, unsigned denom_power) {
  return RationalGF(poly(numerator), denom_power);
}

// c * prod (n - r) over the given roots.
inline UniPoly from_roots(const Rational& c, std::initializer_list<long> roots) {
  UniPoly p = UniPoly::constant(c);
  for (long r : roots) p = p * UniPoly::linear_factor(r);
  return p;
}

// Integer points of the bounding box of nP that the LP says lie in nP.
inline std::vector<IntVector> brute_force_points(const LatticePolytope& p, unsigned long n) {
  const std::size_t s = p.ambient_dim();
  IntVector lo(s), hi(s);
  for (std::size_t i = 0; i < s; ++i) {
    lo[i] = hi[i] = p.vertices().front()[i];
    for (const auto& v : p.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
    lo[i] *= n;
    hi[i] *= n;
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    if (n == 0 ? std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; })
               : contains(p, std::span<const Integer>(x), Rational(static_cast<long>(n)))) {
      out.push_back(x);
    }
    std::size_t i = s;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

// x in n relint(P) for full-dimensional P, by pushing x away from every
// vertex u of nP: x is interior iff x + eps (x - u) stays in nP. A facet
// a.y <= b with primitive integer a has |a|_1 <= s! D^(s-1) (D the widest
// coordinate range of P), and an interior lattice point has a.x <= b - 1,
// so the exit parameter along that ray is at least 1 / (s! D^s n).
inline bool in_interior(const LatticePolytope& p, std::span<const Integer> x, unsigned long n) {
  const std::size_t s = p.ambient_dim();
  Integer range = 1;
  for (std::size_t i = 0; i < s; ++i) {
    Integer lo = p.vertices().front()[i], hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    range = std::max(range, Integer(hi - lo));
  }
  Integer bound = 2 * static_cast<long>(n);
  for (std::size_t i = 1; i <= s; ++i) bound *= Integer(static_cast<long>(i)) * range;
  const Rational eps(Integer(1), bound);
  std::vector<Rational> y(s);
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < s; ++i) {
      y[i] = Rational(x[i]) + eps * (Rational(x[i]) - Rational(v[i] * n));
    }
    if (!contains(p, std::span<const Rational>(y), Rational(static_cast<long>(n)))) return false;
  }
  return true;
}

inline Rational brute_force_interior_sum(const LatticePolytope& p, const WeightPoly& w,
                                         unsigned long n) {
  Rational sum = 0;
  for (const auto& a : brute_force_points(p, n)) {
    if (in_interior(p, a, n)) sum += w(std::span<const Integer>(a));
  }
  return sum;
}

inline Rational brute_force_weighted_sum(const LatticePolytope& p, const WeightPoly& w,
                                         unsigned long n) {
  Rational sum = 0;
  for (const auto& a : brute_force_points(p, n)) sum += w(std::span<const Integer>(a));
  return sum;
}

// A(d,k) = (d-k+1) A(d-1,k-1) + k A(d-1,k), A(0,0) = 1.
inline Integer eulerian_recurrence(unsigned d, unsigned k) {
  std::vector<Integer> row{1};
  for (unsigned m = 1; m <= d; ++m) {
    std::vector<Integer> next(m + 1, 0);
    for (unsigned j = 1; j <= m; ++j) {
      Integer a = (j - 1 < row.size()) ? row[j - 1] : Integer(0);
      Integer b = (j < row.size()) ? row[j] : Integer(0);
      next[j] = Integer(m - j + 1) * a + Integer(j) * b;
    }
    row = std::move(next);
  }
  return k < row.size() ? row[k] : Integer(0);
}

// Random polytope with s <= 3 and coordinates in [0, max_coord].
inline LatticePolytope random_polytope(std::mt19937& rng, std::size_t s, long max_coord,
                                       std::size_t max_vertices = 5) {
  std::uniform_int_distribution<long> coord(0, max_coord);
  std::uniform_int_distribution<std::size_t> count(1, max_vertices);
  std::vector<IntVector> pts(count(rng), IntVector(s));
  for (auto& v : pts)
    for (auto& c : v) c = coord(rng);
  return LatticePolytope(std::move(pts));
}

// Rejection-samples random_polytope until it is full-dimensional.
inline LatticePolytope random_full_polytope(std::mt19937& rng, std::size_t s, long max_coord) {
  while (true) {
    LatticePolytope p = random_polytope(rng, s, max_coord, s + 3);
    if (p.is_full_dimensional()) return p;
  }
}

inline WeightPoly random_monomial(std::mt19937& rng, std::size_t s, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> total(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, s - 1);
  Exponent e(s, 0);
  for (unsigned k = total(rng); k > 0; --k) ++e[var(rng)];
  std::uniform_int_distribution<long> c(1, 5);
  return WeightPoly::monomial(Rational(c(rng)), e);
}

inline WeightPoly random_weight(std::mt19937& rng, std::size_t s, unsigned max_degree) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  WeightPoly w(s);
  for (int t = terms(rng); t > 0; --t) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    w += c * random_monomial(rng, s, max_degree);
  }
  return w;
}

}  // namespace ehrwt::testing
