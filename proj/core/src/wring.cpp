#include "ehrwt/wring.hpp"

#include <algorithm>

#include "ehrwt/errors.hpp"
#include "ehrwt/interpolate.hpp"
#include "ehrwt/series.hpp"

namespace ehrwt {

LinearWeightTuple::LinearWeightTuple(std::vector<IntVector> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InputError("weight tuple needs at least one row");
  const std::size_t s = rows_.front().size();
  if (s == 0) throw InputError("weight tuple rows must be non-empty");
  for (const auto& r : rows_) {
    if (r.size() != s) throw InputError("weight tuple rows have differing lengths");
    for (const auto& x : r) {
      if (x < 0) throw InputError("weight tuple entries must lie in N");
    }
  }
}

LinearWeightTuple LinearWeightTuple::from(const std::vector<std::vector<long>>& rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return LinearWeightTuple(std::move(out));
}

LinearWeightTuple LinearWeightTuple::identity(std::size_t vars) {
  std::vector<IntVector> rows(vars, IntVector(vars, 0));
  for (std::size_t i = 0; i < vars; ++i) rows[i][i] = 1;
  return LinearWeightTuple(std::move(rows));
}

IntVector LinearWeightTuple::operator()(std::span<const Integer> point) const {
  IntVector image(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < point.size(); ++j) image[i] += rows_[i][j] * point[j];
  }
  return image;
}

namespace {

void check_inputs(const LatticePolytope& polytope, const LinearWeightTuple& weights) {
  if (!polytope.has_nonnegative_vertices()) {
    throw InputError("weighted Ehrhart ring needs vertices in N^s");
  }
  if (weights.vars() != polytope.ambient_dim()) {
    throw InputError("weight tuple has " + std::to_string(weights.vars()) +
                     " columns but the polytope lives in dimension " +
                     std::to_string(polytope.ambient_dim()));
  }
}

}  // namespace

LatticePolytope image_polytope(const LatticePolytope& polytope, const LinearWeightTuple& weights) {
  check_inputs(polytope, weights);
  std::vector<IntVector> images;
  for (const auto& v : polytope.vertices()) {
    IntVector w = weights(v);
    if (std::find(images.begin(), images.end(), w) == images.end()) images.push_back(std::move(w));
  }
  return LatticePolytope(std::move(images));
}

std::size_t hilbert_value(const LatticePolytope& polytope, const LinearWeightTuple& weights,
                          unsigned long n) {
  check_inputs(polytope, weights);
  std::vector<IntVector> images;
  for_each_lattice_point(polytope, n,
                         [&](std::span<const Integer> a) { images.push_back(weights(a)); });
  std::sort(images.begin(), images.end());
  return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

HilbertFit hilbert_polynomial(const LatticePolytope& polytope, const LinearWeightTuple& weights,
                              const HilbertOptions& options) {
  const unsigned long degree = static_cast<unsigned long>(image_polytope(polytope, weights).dim());
  HilbertFit fit;
  auto sample = [&](unsigned long n) {
    while (fit.samples.size() <= n) {
      fit.samples.push_back(hilbert_value(polytope, weights, fit.samples.size()));
    }
    return Rational(static_cast<unsigned long>(fit.samples[n]));
  };

  for (unsigned long start = 1; start + degree + options.margin <= options.n_max; ++start) {
    std::vector<Sample> window;
    for (unsigned long n = start; n <= start + degree; ++n) {
      window.push_back(Sample{Rational(n), sample(n)});
    }
    UniPoly g = lagrange_interpolate(window);
    bool stable = true;
    for (unsigned long n = start + degree + 1; n <= start + degree + options.margin; ++n) {
      if (g(Rational(n)) != sample(n)) {
        stable = false;
        break;
      }
    }
    if (!stable) continue;

    unsigned long onset = start;
    while (onset > 0 && g(Rational(onset - 1)) == sample(onset - 1)) --onset;
    fit.determined = true;
    fit.polynomial = std::move(g);
    fit.onset = onset;
    return fit;
  }
  for (unsigned long n = 0; n <= options.n_max; ++n) sample(n);
  return fit;
}

RationalGF hilbert_series(const HilbertFit& fit) {
  if (!fit.determined) {
    std::string values;
    for (auto v : fit.samples) values += (values.empty() ? "" : ",") + std::to_string(v);
    throw InputError("Hilbert polynomial undetermined; samples H(0..) = " + values);
  }
  std::vector<Rational> correction;
  for (unsigned long n = 0; n < fit.onset; ++n) {
    correction.push_back(Rational(static_cast<unsigned long>(fit.samples[n])) -
                         fit.polynomial(Rational(n)));
  }
  RationalGF series = gf_of_polynomial(fit.polynomial) + RationalGF(UniPoly(correction), 0);
  for (const auto& c : series.numerator().coeffs()) {
    if (!is_integer(c)) {
      throw ConsistencyError("Hilbert series numerator has a non-integer coefficient " +
                             to_string(c));
    }
  }
  if (series.denom_power() > 0 && series.numerator()(1) == 0) {
    throw ConsistencyError("Hilbert series numerator vanishes at 1");
  }
  return series;
}

RationalGF hilbert_series(const LatticePolytope& polytope, const LinearWeightTuple& weights,
                          const HilbertOptions& options) {
  return hilbert_series(hilbert_polynomial(polytope, weights, options));
}

ImageGapReport image_gap_report(const LatticePolytope& polytope, const LinearWeightTuple& weights,
                                unsigned long n) {
  const std::size_t images = hilbert_value(polytope, weights, n);
  std::size_t hull = 0;
  for_each_lattice_point(image_polytope(polytope, weights), n,
                         [&](std::span<const Integer>) { ++hull; });
  return ImageGapReport{images, hull, images < hull};
}

}  // namespace ehrwt
