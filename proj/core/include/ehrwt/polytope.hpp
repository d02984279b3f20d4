#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "ehrwt/linalg.hpp"
#include "ehrwt/lp.hpp"
#include "ehrwt/rational.hpp"

namespace ehrwt {

/// coeffs . x <= rhs (inequality) or coeffs . x == rhs (equation).
struct Constraint {
  RatVector coeffs;
  Rational rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// H-representation of a polytope: affine hull equations plus facet
/// inequalities that are irredundant relative to that hull.
struct HRepresentation {
  std::vector<Constraint> equations;
  std::vector<Constraint> inequalities;

  // Membership of x in scale * P. With strict set, facet inequalities must
  // hold strictly (relative interior); equations always hold exactly.
  bool admits(std::span<const Rational> x, const Rational& scale = 1,
              bool strict = false) const;
};

/// Convex hull of finitely many integer points in Z^s.
///
/// Immutable. The constructor derives the intrinsic dimension and the exact
/// H-representation (Fourier-Motzkin elimination of barycentric weights),
/// along with H-representations of every coordinate-prefix projection used
/// by lattice-point enumeration. Copies share that cached data.
class LatticePolytope {
 public:
  // Throws InputError for an empty list, s == 0, or ragged rows.
  explicit LatticePolytope(std::vector<IntVector> vertices);
  static LatticePolytope from(const std::vector<std::vector<long>>& rows);

  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
  std::size_t ambient_dim() const noexcept { return vertices_.front().size(); }
  int dim() const noexcept;
  const HRepresentation& h_representation() const noexcept;

  // H-representation of conv{v[0..k)}, k = 1..s.
  const HRepresentation& prefix_projection(std::size_t k) const;

  bool is_full_dimensional() const noexcept {
    return dim() == static_cast<int>(ambient_dim());
  }
  bool has_nonnegative_vertices() const;
  // Every coordinate is non-zero on some vertex.
  bool is_non_degenerate() const;

 private:
  struct Cache;

  std::vector<IntVector> vertices_;
  std::shared_ptr<const Cache> cache_;
};

int dimension(const LatticePolytope& polytope);
const HRepresentation& facets(const LatticePolytope& polytope);

// H-representation of conv(points) by eliminating barycentric coordinates.
// Exposed for testing; LatticePolytope caches its own.
HRepresentation compute_h_representation(const std::vector<IntVector>& points);

// Cap on search-tree nodes visited by one enumeration: EHRWT_MAX_POINTS
// when set to a positive integer, else 10^8.
std::uint64_t enumeration_limit();

using PointVisitor = std::function<void(std::span<const Integer>)>;

// Visits nP ∩ Z^s in lexicographic order. Throws ResourceLimitError when
// more than max_nodes search nodes would be visited.
void for_each_lattice_point(const LatticePolytope& polytope, unsigned long n,
                            const PointVisitor& visit,
                            std::uint64_t max_nodes = enumeration_limit());

std::vector<IntVector> lattice_points(const LatticePolytope& polytope,
                                      unsigned long n,
                                      std::uint64_t max_nodes = enumeration_limit());

// Points of n * relint(P) ∩ Z^s, lexicographic. Requires n >= 1.
std::vector<IntVector> interior_lattice_points(
    const LatticePolytope& polytope, unsigned long n,
    std::uint64_t max_nodes = enumeration_limit());

// x in scale * P, decided by exact LP feasibility over convex combinations
// of the scaled vertices. Throws InputError if x has the wrong length.
bool contains(const LatticePolytope& polytope, std::span<const Rational> x,
              const Rational& scale = 1);
bool contains(const LatticePolytope& polytope, std::span<const Integer> x,
              const Rational& scale = 1);

}  // namespace ehrwt
