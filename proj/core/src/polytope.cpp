#include "ehrwt/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "ehrwt/errors.hpp"

namespace ehrwt {

namespace {

using TightSet = std::vector<bool>;

struct Row {
  RatVector coeffs;
  Rational rhs;
  TightSet tight;
};

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * b[i];
  }
  return s;
}

// Fourier-Motzkin state over variables (x_0..x_{s-1}, lambda_0..lambda_{m-1}).
// Generator i lifts to (p_i, e_i); the current system always describes the
// convex hull of the lifted generators projected onto the active columns,
// which is what makes the facet test below exact.
class Eliminator {
 public:
  Eliminator(std::vector<RatVector> lifted, std::vector<std::size_t> active)
      : gens_(std::move(lifted)), active_(std::move(active)) {}

  std::vector<Row> prune(std::vector<Row> rows) const {
    std::vector<RatVector> projected;
    projected.reserve(gens_.size());
    for (const auto& g : gens_) projected.push_back(project(g));
    const int dim = static_cast<int>(affine_dimension(projected));

    std::map<TightSet, bool> verdict;
    std::set<TightSet> kept;
    std::vector<Row> out;
    for (auto& row : rows) {
      if (row.tight.empty()) row.tight = tight_set(row);
      const auto count = std::count(row.tight.begin(), row.tight.end(), true);
      if (count < dim) continue;
      if (kept.contains(row.tight)) continue;
      auto it = verdict.find(row.tight);
      if (it == verdict.end()) {
        std::vector<RatVector> face;
        for (std::size_t i = 0; i < projected.size(); ++i) {
          if (row.tight[i]) face.push_back(projected[i]);
        }
        const bool facet = !face.empty() &&
                           static_cast<int>(affine_dimension(face)) == dim - 1;
        it = verdict.emplace(row.tight, facet).first;
      }
      if (!it->second) continue;
      kept.insert(row.tight);
      out.push_back(std::move(row));
    }
    return out;
  }

  std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t column) {
    std::vector<const Row*> pos, neg;
    std::vector<Row> out;
    for (const auto& r : rows) {
      if (r.coeffs[column] > 0) {
        pos.push_back(&r);
      } else if (r.coeffs[column] < 0) {
        neg.push_back(&r);
      } else {
        out.push_back(r);
      }
    }
    active_.erase(std::remove(active_.begin(), active_.end(), column), active_.end());

    std::set<TightSet> seen;
    for (const Row* p : pos) {
      for (const Row* q : neg) {
        // Slacks of the combination vanish exactly where both slacks do.
        TightSet tight(gens_.size());
        for (std::size_t i = 0; i < tight.size(); ++i) tight[i] = p->tight[i] && q->tight[i];
        if (!seen.insert(tight).second) continue;
        const Rational fp = -q->coeffs[column];
        const Rational fq = p->coeffs[column];
        Row r{RatVector(p->coeffs.size()), fp * p->rhs + fq * q->rhs, std::move(tight)};
        for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
          r.coeffs[k] = fp * p->coeffs[k] + fq * q->coeffs[k];
        }
        r.coeffs[column] = 0;
        make_primitive(r.coeffs, r.rhs);
        out.push_back(std::move(r));
      }
    }
    return prune(std::move(out));
  }

 private:
  RatVector project(const RatVector& g) const {
    RatVector p;
    p.reserve(active_.size());
    for (auto c : active_) p.push_back(g[c]);
    return p;
  }

  TightSet tight_set(const Row& row) const {
    TightSet t(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const Rational slack = row.rhs - dot(row.coeffs, gens_[i]);
      if (slack < 0) throw ConsistencyError("Fourier-Motzkin produced an invalid inequality");
      t[i] = slack == 0;
    }
    return t;
  }

  std::vector<RatVector> gens_;
  std::vector<std::size_t> active_;
};

// Reduced row echelon form of the hull equations, pivoting from the last
// column so that leading coordinates stay free.
std::vector<std::pair<Constraint, std::size_t>> echelon_from_right(std::vector<Constraint> eqs,
                                                                   std::size_t s) {
  std::vector<std::pair<Constraint, std::size_t>> out;
  std::size_t r = 0;
  for (std::size_t c = s; c-- > 0 && r < eqs.size();) {
    std::size_t p = r;
    while (p < eqs.size() && eqs[p].coeffs[c] == 0) ++p;
    if (p == eqs.size()) continue;
    std::swap(eqs[r], eqs[p]);
    const Rational inv = 1 / eqs[r].coeffs[c];
    for (auto& a : eqs[r].coeffs) a *= inv;
    eqs[r].rhs *= inv;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i == r || eqs[i].coeffs[c] == 0) continue;
      const Rational f = eqs[i].coeffs[c];
      for (std::size_t k = 0; k < s; ++k) eqs[i].coeffs[k] -= f * eqs[r].coeffs[k];
      eqs[i].rhs -= f * eqs[r].rhs;
    }
    out.emplace_back(eqs[r], c);
    ++r;
  }
  return out;
}

}  // namespace

HRepresentation compute_h_representation(const std::vector<IntVector>& input) {
  if (input.empty()) throw InputError("polytope needs at least one point");
  std::vector<IntVector> points;
  for (const auto& p : input) {
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  }
  const std::size_t s = points.front().size();
  const std::size_t m = points.size();
  const std::size_t width = s + m;

  // x_j - sum_i p_ij lambda_i = 0 and sum_i lambda_i = 1.
  std::vector<Constraint> eqs(s + 1, Constraint{RatVector(width), 0});
  for (std::size_t j = 0; j < s; ++j) {
    eqs[j].coeffs[j] = 1;
    for (std::size_t i = 0; i < m; ++i) eqs[j].coeffs[s + i] = -points[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) eqs[s].coeffs[s + i] = 1;
  eqs[s].rhs = 1;

  // Gauss-Jordan on the lambda columns.
  std::vector<std::optional<std::size_t>> pivot_of(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < eqs.size(); ++c) {
    const std::size_t col = s + c;
    std::size_t p = r;
    while (p < eqs.size() && eqs[p].coeffs[col] == 0) ++p;
    if (p == eqs.size()) continue;
    std::swap(eqs[r], eqs[p]);
    const Rational inv = 1 / eqs[r].coeffs[col];
    for (auto& a : eqs[r].coeffs) a *= inv;
    eqs[r].rhs *= inv;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i == r || eqs[i].coeffs[col] == 0) continue;
      const Rational f = eqs[i].coeffs[col];
      for (std::size_t k = 0; k < width; ++k) eqs[i].coeffs[k] -= f * eqs[r].coeffs[k];
      eqs[i].rhs -= f * eqs[r].rhs;
    }
    pivot_of[c] = r++;
  }

  std::vector<Constraint> hull;
  for (std::size_t i = r; i < eqs.size(); ++i) {
    const bool zero = std::all_of(eqs[i].coeffs.begin(), eqs[i].coeffs.begin() + s,
                                  [](const Rational& a) { return a == 0; });
    if (zero) {
      if (eqs[i].rhs != 0) throw ConsistencyError("inconsistent barycentric system");
      continue;
    }
    hull.push_back(Constraint{RatVector(eqs[i].coeffs.begin(), eqs[i].coeffs.begin() + s),
                              eqs[i].rhs});
  }

  // lambda_c >= 0, rewritten through the pivot rows where lambda_c is basic.
  std::vector<Row> rows;
  std::vector<std::size_t> free_columns;
  for (std::size_t c = 0; c < m; ++c) {
    Row row{RatVector(width), 0, {}};
    if (pivot_of[c]) {
      const Constraint& e = eqs[*pivot_of[c]];
      row.coeffs = e.coeffs;
      row.coeffs[s + c] = 0;
      row.rhs = e.rhs;
    } else {
      row.coeffs[s + c] = -1;
      free_columns.push_back(s + c);
    }
    make_primitive(row.coeffs, row.rhs);
    rows.push_back(std::move(row));
  }

  std::vector<RatVector> lifted;
  for (std::size_t i = 0; i < m; ++i) {
    RatVector g(width);
    for (std::size_t j = 0; j < s; ++j) g[j] = points[i][j];
    g[s + i] = 1;
    lifted.push_back(std::move(g));
  }
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < s; ++j) active.push_back(j);
  active.insert(active.end(), free_columns.begin(), free_columns.end());

  Eliminator fm(std::move(lifted), std::move(active));
  rows = fm.prune(std::move(rows));
  while (!free_columns.empty()) {
    // Eliminate the column producing the fewest combinations first.
    auto cost = [&](std::size_t col) {
      std::size_t pos = 0, neg = 0;
      for (const auto& row : rows) {
        if (row.coeffs[col] > 0) ++pos;
        if (row.coeffs[col] < 0) ++neg;
      }
      return pos * neg;
    };
    auto best = std::min_element(free_columns.begin(), free_columns.end(),
                                 [&](std::size_t a, std::size_t b) { return cost(a) < cost(b); });
    const std::size_t col = *best;
    free_columns.erase(best);
    rows = fm.eliminate(rows, col);
  }

  HRepresentation out;
  const auto echelon = echelon_from_right(std::move(hull), s);
  for (const auto& [eq, pivot] : echelon) {
    Constraint c = eq;
    make_primitive(c.coeffs, c.rhs);
    out.equations.push_back(std::move(c));
  }
  for (auto& row : rows) {
    Constraint c{RatVector(row.coeffs.begin(), row.coeffs.begin() + s), row.rhs};
    for (const auto& [eq, pivot] : echelon) {
      if (c.coeffs[pivot] == 0) continue;
      const Rational f = c.coeffs[pivot];
      for (std::size_t k = 0; k < s; ++k) c.coeffs[k] -= f * eq.coeffs[k];
      c.rhs -= f * eq.rhs;
    }
    make_primitive(c.coeffs, c.rhs);
    out.inequalities.push_back(std::move(c));
  }
  auto by_value = [](const Constraint& a, const Constraint& b) {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.rhs < b.rhs;
  };
  std::sort(out.equations.begin(), out.equations.end(), by_value);
  std::sort(out.inequalities.begin(), out.inequalities.end(), by_value);
  return out;
}

bool HRepresentation::admits(std::span<const Rational> x, const Rational& scale,
                             bool strict) const {
  auto lhs = [&](const Constraint& c) {
    if (c.coeffs.size() != x.size()) throw InputError("point has the wrong dimension");
    Rational v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v += c.coeffs[i] * x[i];
    return v;
  };
  for (const auto& e : equations) {
    if (lhs(e) != scale * e.rhs) return false;
  }
  for (const auto& f : inequalities) {
    const Rational v = lhs(f);
    const Rational bound = scale * f.rhs;
    if (strict ? !(v < bound) : !(v <= bound)) return false;
  }
  return true;
}

struct LatticePolytope::Cache {
  int dim = 0;
  HRepresentation hrep;
  std::vector<HRepresentation> prefixes;  // k = 1..s-1
};

LatticePolytope::LatticePolytope(std::vector<IntVector> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("polytope needs at least one vertex");
  const std::size_t s = vertices_.front().size();
  if (s == 0) throw InputError("ambient dimension must be at least 1");
  for (const auto& v : vertices_) {
    if (v.size() != s) throw InputError("vertices have differing lengths");
  }

  auto cache = std::make_shared<Cache>();
  std::vector<RatVector> rational;
  for (const auto& v : vertices_) rational.push_back(to_rational(v));
  cache->dim = static_cast<int>(affine_dimension(rational));
  cache->hrep = compute_h_representation(vertices_);
  for (std::size_t k = 1; k < s; ++k) {
    std::vector<IntVector> truncated;
    for (const auto& v : vertices_) truncated.emplace_back(v.begin(), v.begin() + k);
    cache->prefixes.push_back(compute_h_representation(truncated));
  }
  cache_ = std::move(cache);
}

LatticePolytope LatticePolytope::from(const std::vector<std::vector<long>>& rows) {
  std::vector<IntVector> vertices;
  for (const auto& r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    vertices.push_back(std::move(v));
  }
  return LatticePolytope(std::move(vertices));
}

int LatticePolytope::dim() const noexcept { return cache_->dim; }

const HRepresentation& LatticePolytope::h_representation() const noexcept {
  return cache_->hrep;
}

const HRepresentation& LatticePolytope::prefix_projection(std::size_t k) const {
  if (k == 0 || k > ambient_dim()) throw InputError("prefix length out of range");
  return k == ambient_dim() ? cache_->hrep : cache_->prefixes[k - 1];
}

bool LatticePolytope::has_nonnegative_vertices() const {
  for (const auto& v : vertices_) {
    for (const auto& x : v) {
      if (x < 0) return false;
    }
  }
  return true;
}

bool LatticePolytope::is_non_degenerate() const {
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    const bool hit = std::any_of(vertices_.begin(), vertices_.end(),
                                 [i](const IntVector& v) { return v[i] != 0; });
    if (!hit) return false;
  }
  return true;
}

int dimension(const LatticePolytope& polytope) { return polytope.dim(); }

const HRepresentation& facets(const LatticePolytope& polytope) {
  return polytope.h_representation();
}

bool contains(const LatticePolytope& polytope, std::span<const Rational> x,
              const Rational& scale) {
  const std::size_t s = polytope.ambient_dim();
  if (x.size() != s) throw InputError("point has the wrong dimension");
  const auto& verts = polytope.vertices();
  RatMatrix A(s + 1, RatVector(verts.size()));
  RatVector b(s + 1);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < verts.size(); ++i) A[j][i] = scale * verts[i][j];
    b[j] = x[j];
  }
  for (std::size_t i = 0; i < verts.size(); ++i) A[s][i] = 1;
  b[s] = 1;
  return find_nonnegative_solution(A, b).has_value();
}

bool contains(const LatticePolytope& polytope, std::span<const Integer> x,
              const Rational& scale) {
  const RatVector q(x.begin(), x.end());
  return contains(polytope, std::span<const Rational>(q), scale);
}

}  // namespace ehrwt
