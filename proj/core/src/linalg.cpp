#include "ehrwt/linalg.hpp"

#include <utility>

namespace ehrwt {

std::size_t rank(RatMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t affine_dimension(std::span<const RatVector> points) {
  RatMatrix diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

void make_primitive(RatVector& row, Rational& rhs) {
  Integer lcm = rhs.get_den();
  for (const auto& a : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
  Integer gcd = 0;
  for (auto& a : row) {
    a *= lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), a.get_num_mpz_t());
  }
  rhs *= lcm;
  if (gcd == 0) return;
  mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), rhs.get_num_mpz_t());
  for (auto& a : row) a /= gcd;
  rhs /= gcd;
}

}  // namespace ehrwt
