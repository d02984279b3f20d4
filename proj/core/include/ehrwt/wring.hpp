#pragma once

#include <vector>

#include "ehrwt/polytope.hpp"
#include "ehrwt/rational_gf.hpp"
#include "ehrwt/unipoly.hpp"

namespace ehrwt {

/// p linear forms w_1..w_p on Z^s with w_i(e_j) in N, stored row-wise.
class LinearWeightTuple {
 public:
  // Throws InputError for no rows, ragged rows or negative entries.
  explicit LinearWeightTuple(std::vector<IntVector> rows);
  static LinearWeightTuple from(const std::vector<std::vector<long>>& rows);
  static LinearWeightTuple identity(std::size_t vars);

  const std::vector<IntVector>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t vars() const noexcept { return rows_.front().size(); }

  IntVector operator()(std::span<const Integer> point) const;

 private:
  std::vector<IntVector> rows_;
};

// w(P) = conv{W v_i} in Z^p.
LatticePolytope image_polytope(const LatticePolytope& polytope,
                               const LinearWeightTuple& weights);

// H(n) = |W(nP ∩ Z^s)|, the number of distinct image vectors.
std::size_t hilbert_value(const LatticePolytope& polytope,
                          const LinearWeightTuple& weights, unsigned long n);

struct HilbertOptions {
  unsigned long n_max = 12;
  unsigned long margin = 3;
};

struct HilbertFit {
  bool determined = false;
  UniPoly polynomial;
  unsigned long onset = 0;
  // H(0), H(1), ... for every n that was sampled.
  std::vector<std::size_t> samples;
};

/// Polynomial g of degree dim w(P) with H(n) = g(n) for n >= onset.
///
/// Windows n0..n0+D are interpolated for n0 = 1, 2, ... until `margin`
/// further samples agree; the onset is then pushed back as far as g keeps
/// matching. When no window fits below n_max the result is undetermined
/// and carries the samples.
HilbertFit hilbert_polynomial(const LatticePolytope& polytope,
                              const LinearWeightTuple& weights,
                              const HilbertOptions& options = {});

// sum_{n<onset} (H(n) - g(n)) x^n + sum_n g(n) x^n. Throws InputError for
// an undetermined fit and ConsistencyError if the numerator is not an
// integer polynomial with h(1) != 0.
RationalGF hilbert_series(const HilbertFit& fit);
RationalGF hilbert_series(const LatticePolytope& polytope,
                          const LinearWeightTuple& weights,
                          const HilbertOptions& options = {});

struct ImageGapReport {
  std::size_t image_points;  // |W(nP ∩ Z^s)|
  std::size_t hull_points;   // |n w(P) ∩ Z^p|
  bool strict;
};

ImageGapReport image_gap_report(const LatticePolytope& polytope,
                                const LinearWeightTuple& weights,
                                unsigned long n);

}  // namespace ehrwt
