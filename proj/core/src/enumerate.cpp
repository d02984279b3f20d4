#include <cstdlib>
#include <optional>
#include <string>

#include "ehrwt/errors.hpp"
#include "ehrwt/polytope.hpp"

namespace ehrwt {

namespace {

constexpr std::uint64_t kDefaultEnumerationLimit = 100'000'000;

struct IntConstraint {
  IntVector coeffs;  // coefficients on x_0..x_k
  Integer rhs;       // unscaled
  bool equation;
};

// Constraints of the projection onto x_0..x_k that involve x_k, with
// integer coefficients. Rows not touching x_k are implied by the previous
// level since the projections are exact.
std::vector<std::vector<IntConstraint>> level_constraints(const LatticePolytope& polytope) {
  const std::size_t s = polytope.ambient_dim();
  std::vector<std::vector<IntConstraint>> levels(s);
  for (std::size_t k = 0; k < s; ++k) {
    const HRepresentation& h = polytope.prefix_projection(k + 1);
    auto add = [&](const Constraint& c, bool equation) {
      if (c.coeffs[k] == 0) return;
      RatVector coeffs = c.coeffs;
      Rational rhs = c.rhs;
      make_primitive(coeffs, rhs);
      IntConstraint ic{IntVector(k + 1), rhs.get_num(), equation};
      for (std::size_t j = 0; j <= k; ++j) ic.coeffs[j] = coeffs[j].get_num();
      levels[k].push_back(std::move(ic));
    };
    for (const auto& e : h.equations) add(e, true);
    for (const auto& f : h.inequalities) add(f, false);
  }
  return levels;
}

class Enumerator {
 public:
  Enumerator(const LatticePolytope& polytope, unsigned long n, std::uint64_t max_nodes,
             const PointVisitor& visit)
      : levels_(level_constraints(polytope)),
        n_(n),
        max_nodes_(max_nodes),
        visit_(visit),
        point_(polytope.ambient_dim()) {}

  void run() { descend(0); }

 private:
  void descend(std::size_t k) {
    if (k == point_.size()) {
      visit_(point_);
      return;
    }
    std::optional<Integer> lo, hi;
    Integer residual;
    for (const auto& c : levels_[k]) {
      residual = c.rhs * n_;
      for (std::size_t j = 0; j < k; ++j) residual -= c.coeffs[j] * point_[j];
      const Integer& a = c.coeffs[k];
      if (c.equation) {
        if (!mpz_divisible_p(residual.get_mpz_t(), a.get_mpz_t())) return;
        const Integer v = residual / a;
        if (!lo || v > *lo) lo = v;
        if (!hi || v < *hi) hi = v;
      } else if (a > 0) {
        Integer v;
        mpz_fdiv_q(v.get_mpz_t(), residual.get_mpz_t(), a.get_mpz_t());
        if (!hi || v < *hi) hi = v;
      } else {
        Integer v;
        mpz_cdiv_q(v.get_mpz_t(), residual.get_mpz_t(), a.get_mpz_t());
        if (!lo || v > *lo) lo = v;
      }
      if (lo && hi && *lo > *hi) return;
    }
    if (!lo || !hi) throw ConsistencyError("unbounded coordinate during enumeration");
    for (Integer v = *lo; v <= *hi; ++v) {
      if (++nodes_ > max_nodes_) {
        throw ResourceLimitError("enumeration exceeded " + std::to_string(max_nodes_) +
                                 " search nodes (raise EHRWT_MAX_POINTS)");
      }
      point_[k] = v;
      descend(k + 1);
    }
  }

  std::vector<std::vector<IntConstraint>> levels_;
  Integer n_;
  std::uint64_t max_nodes_;
  const PointVisitor& visit_;
  IntVector point_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t enumeration_limit() {
  const char* env = std::getenv("EHRWT_MAX_POINTS");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationLimit;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefaultEnumerationLimit;
  return v;
}

void for_each_lattice_point(const LatticePolytope& polytope, unsigned long n,
                            const PointVisitor& visit, std::uint64_t max_nodes) {
  Enumerator(polytope, n, max_nodes, visit).run();
}

std::vector<IntVector> lattice_points(const LatticePolytope& polytope, unsigned long n,
                                      std::uint64_t max_nodes) {
  std::vector<IntVector> out;
  for_each_lattice_point(
      polytope, n, [&](std::span<const Integer> p) { out.emplace_back(p.begin(), p.end()); },
      max_nodes);
  return out;
}

std::vector<IntVector> interior_lattice_points(const LatticePolytope& polytope, unsigned long n,
                                               std::uint64_t max_nodes) {
  if (n == 0) throw InputError("interior enumeration needs n >= 1");
  const HRepresentation& h = polytope.h_representation();
  const Rational scale(static_cast<long>(n));
  std::vector<IntVector> out;
  RatVector q(polytope.ambient_dim());
  for_each_lattice_point(
      polytope, n,
      [&](std::span<const Integer> p) {
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i];
        if (h.admits(q, scale, true)) out.emplace_back(p.begin(), p.end());
      },
      max_nodes);
  return out;
}

}  // namespace ehrwt
