#include "ehrwt/lp.hpp"

#include "ehrwt/errors.hpp"

namespace ehrwt {

std::optional<RatVector> find_nonnegative_solution(const RatMatrix& A, const RatVector& b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw InputError("LP right-hand side has the wrong length");
  const std::size_t n = m == 0 ? 0 : A.front().size();
  if (m == 0) return RatVector{};

  // Tableau [A | I | b] with one artificial per row; the last row holds the
  // phase-one reduced costs of minimizing the sum of artificials.
  const std::size_t cols = n + m;
  RatMatrix T(m + 1, RatVector(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw InputError("ragged LP constraint matrix");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    T[i][n + i] = 1;
    T[i][cols] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) T[m][j] -= T[i][j];
    T[m][cols] -= T[i][cols];
  }

  while (true) {
    // Bland: lowest-index improving column, then lowest-index basic variable
    // among minimum ratios.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rational ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always limits.
    if (leave == m) throw ConsistencyError("unbounded phase-one simplex");

    const Rational pivot = T[leave][enter];
    for (auto& v : T[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  if (T[m][cols] != 0) return std::nullopt;
  RatVector y(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) y[basis[i]] = T[i][cols];
  }
  return y;
}

}  // namespace ehrwt
