// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "ehrwt/ehrhart.hpp"
#include "ehrwt/series.hpp"
#include "ehrwt/wring.hpp"
#include "support/oracles.hpp"

using namespace ehrwt;
using ehrwt::testing::from_roots;
using ehrwt::testing::gf;
using ehrwt::testing::poly;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void equal(const UniPoly& got, const UniPoly& want, const std::string& what) {
    expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
  }
  void equal(const RationalGF& got, const RationalGF& want, const std::string& what) {
    expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
  }
  void equal(const Rational& got, const Rational& want, const std::string& what) {
    expect(got == want, what + ": got " + to_string(got) + ", want " + to_string(want));
  }

  // Printed under the criterion line whether it passes or not.
  void note(const std::string& text) { notes_.push_back(text); }

  std::size_t count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

LatticePolytope P(const std::vector<std::vector<long>>& rows) { return LatticePolytope::from(rows); }
WeightPoly W(const char* text, std::size_t vars) { return parse_weight(text, vars); }

LatticePolytope square() { return P({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
LatticePolytope triangle() { return P({{1, 0}, {0, 1}, {1, 1}}); }

// Polynomial and series through the interpolation path.
void weighted_pair(Checks& c, const LatticePolytope& p, const char* weight, const UniPoly& e,
                   const RationalGF* f, const std::string& label) {
  const WeightPoly w = W(weight, p.ambient_dim());
  const UniPoly got = weighted_ehrhart_polynomial(p, w);
  c.equal(got, e, label + " polynomial");
  if (f) c.equal(weighted_series(p, w), *f, label + " series");
}

void criterion1(Checks& c) {
  // Unit square with w1 = t1+t2, w2 = 2t1+3t2, w3 = t1 and their products.
  const auto sq = square();
  c.equal(ehrhart_polynomial(sq), from_roots(1, {-1, -1}), "square E_P");
  weighted_pair(c, sq, "t1+t2", poly({"0", "1", "2", "1"}), nullptr, "square w1");
  weighted_pair(c, sq, "2*t1+3*t2", poly({"0", "5/2", "5", "5/2"}), nullptr, "square w2");
  weighted_pair(c, sq, "t1", poly({"0", "1/2", "1", "1/2"}), nullptr, "square w3");
  weighted_pair(c, sq, "(t1+t2)*(2*t1+3*t2)", poly({"0", "5/6", "55/12", "20/3", "35/12"}),
                nullptr, "square w1w2");
  // The reference table lists these two under each other's labels; the
  // direct sums at n = 1 (3 for w1w3, 7 for w2w3) settle which is which.
  weighted_pair(c, sq, "(t1+t2)*t1", poly({"0", "1/6", "11/12", "4/3", "7/12"}), nullptr,
                "square w1w3");
  weighted_pair(c, sq, "(2*t1+3*t2)*t1", poly({"0", "1/3", "25/12", "19/6", "17/12"}), nullptr,
                "square w2w3");
  c.equal(ehrwt::testing::brute_force_weighted_sum(sq, W("(t1+t2)*t1", 2), 1), 3, "square w1w3 at n=1");
  c.equal(ehrwt::testing::brute_force_weighted_sum(sq, W("(2*t1+3*t2)*t1", 2), 1), 7,
          "square w2w3 at n=1");
  c.note("square: the reference w1w3 and w2w3 polynomials are listed under swapped labels; checked exchanged");
  weighted_pair(c, sq, "(t1+t2)*(2*t1+3*t2)*t1", poly({"0", "0", "7/6", "25/6", "29/6", "11/6"}),
                nullptr, "square w1w2w3");

  // Unit interval, w = (t1+1)^3: sums of cubes.
  const auto interval = P({{0}, {1}});
  c.equal(ehrhart_polynomial(interval), poly({"1", "1"}), "interval E_P");
  weighted_pair(c, interval, "(t1+1)^3", from_roots(Rational(1, 4), {-1, -1, -2, -2}), nullptr,
                "interval E_P^w");

  // Triangle (1,0), (0,2), (2,3).
  const auto p3 = P({{1, 0}, {0, 2}, {2, 3}});
  {
    const RationalGF f0 = gf({"1", "2", "2"}, 3), f1 = gf({"0", "5", "8", "2"}, 4),
                     f2 = gf({"0", "8", "14", "3"}, 4), fw = gf({"0", "2/25"}, 2);
    c.equal(ehrhart_polynomial(p3), poly({"1", "3/2", "5/2"}), "triangle A E_P");
    c.equal(ehrhart_series(p3), f0, "triangle A F_P");
    weighted_pair(c, p3, "t1", poly({"0", "1", "3/2", "5/2"}), &f1, "triangle A t1");
    weighted_pair(c, p3, "t2", poly({"0", "4/3", "5/2", "25/6"}), &f2, "triangle A t2");
    weighted_pair(c, p3, "2/5*t1 - 6/25*t2", poly({"0", "2/25"}), &fw, "triangle A w");
  }

  // Unit square, w = t1^k t2^k for k = 0..3.
  {
    const RationalGF f[] = {gf({"1", "1"}, 3), gf({"0", "1", "4", "1"}, 5),
                            gf({"0", "1", "18", "42", "18", "1"}, 7),
                            gf({"0", "1", "72", "603", "1168", "603", "72", "1"}, 9)};
    const UniPoly e[] = {poly({"1", "2", "1"}), poly({"0", "0", "1/4", "1/2", "1/4"}),
                         poly({"0", "0", "1/36", "1/6", "13/36", "1/3", "1/9"}),
                         poly({"0", "0", "0", "0", "1/16", "1/4", "3/8", "1/4", "1/16"})};
    const char* weights[] = {"1", "t1*t2", "t1^2*t2^2", "t1^3*t2^3"};
    for (int k = 0; k <= 3; ++k) {
      weighted_pair(c, sq, weights[k], e[k], &f[k], "square k=" + std::to_string(k));
    }
  }

  // Triangle (1,0), (0,1), (1,1) with coordinate weights.
  {
    const auto t = triangle();
    const RationalGF f = gf({"0", "2"}, 4);
    c.equal(ehrhart_polynomial(t), poly({"1", "3/2", "1/2"}), "triangle B E_P");
    weighted_pair(c, t, "t1", poly({"0", "2/3", "1", "1/3"}), &f, "triangle B t1");
    weighted_pair(c, t, "t2", poly({"0", "2/3", "1", "1/3"}), &f, "triangle B t2");
    weighted_pair(c, t, "t1-t2", UniPoly(), nullptr, "triangle B t1-t2");
    const long values[] = {2, 8, 20, 40};
    for (long n = 1; n <= 4; ++n) {
      c.equal(weighted_sum(t, W("t1", 2), n), values[n - 1], "triangle B E^t1(" + std::to_string(n) + ")");
    }
  }

  // Linear lift identity on a tetrahedron with w = t1+t2+t3.
  {
    const auto p = P({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 7}});
    const WeightPoly w = W("t1+t2+t3", 3);
    const auto lift = linear_lift(p, w);
    const UniPoly e_lift = ehrhart_polynomial(lift), e_p = ehrhart_polynomial(p);
    c.equal(e_lift, from_roots(Rational(1, 24), {-1, -2}) * poly({"12", "115", "105"}),
            "tetrahedron E_{P_w}");
    c.equal(e_p, from_roots(Rational(1, 6), {-1, -2}) * poly({"3", "7"}), "tetrahedron E_P");
    const UniPoly expected = from_roots(Rational(1, 8), {0, -1, -2}) * poly({"29", "35"});
    c.equal(e_lift - e_p, expected, "tetrahedron E_{P_w} - E_P");
    c.equal(weighted_ehrhart_polynomial(p, w), expected, "tetrahedron E_P^w");
    c.equal(ehrhart_series(lift), gf({"1", "53", "51"}, 5), "tetrahedron F_{P_w}");
    c.equal(ehrhart_series(p), gf({"1", "6"}, 4), "tetrahedron F_P");
    c.equal(weighted_series(p, w), gf({"0", "48", "57"}, 5), "tetrahedron F_P^w");
  }

  // Segment (2,0), (0,2): linear and affine lifts.
  {
    const auto seg = P({{2, 0}, {0, 2}});
    const auto lift = linear_lift(seg, W("t1+t2", 2));
    c.equal(ehrhart_polynomial(lift), poly({"1", "4", "4"}), "segment E_{P_w}");
    c.equal(ehrhart_polynomial(seg), poly({"1", "2"}), "segment E_P");
    c.equal(ehrhart_polynomial(lift) - ehrhart_polynomial(seg), poly({"0", "2", "4"}),
            "segment linear lift");
    const RationalGF fl = gf({"0", "6", "2"}, 3), fa = gf({"-1", "6", "3"}, 3);
    weighted_pair(c, seg, "t1+t2", poly({"0", "2", "4"}), &fl, "segment linear");
    c.equal(ehrhart_series(lift), gf({"1", "6", "1"}, 3), "segment F_{P_w}");
    std::vector<Rational> row{1, 1};
    const auto affine = weighted_by_affine_lift(seg, row, -1);
    c.equal(affine.lift_polynomial, poly({"1", "4", "4"}), "segment E_{Q1}");
    c.equal(affine.weighted, poly({"-1", "0", "4"}), "segment affine lift");
    weighted_pair(c, seg, "t1+t2-1", poly({"-1", "0", "4"}), &fa, "segment affine");
  }

  // [1,2] with w = t1^2, and the lift that fails for nonlinear w.
  {
    const auto p = P({{1}, {2}});
    weighted_pair(c, p, "t1^2", from_roots(Rational(1, 6), {0}) * poly({"1", "15", "14"}), nullptr,
                  "[1,2] E_P^w");
    const auto q = P({{1, 0}, {2, 0}, {1, 1}, {2, 4}});
    c.equal(ehrhart_polynomial(q), poly({"1", "7/2", "5/2"}), "[1,2] E_Q");
    // (5/2 n^2 + 7/2 n + 1) - (n + 1) = (5/2) n (n + 1); the reference's
    // factored form (5/2) n (n - 1) does not match its own two terms.
    c.equal(ehrhart_polynomial(q) - ehrhart_polynomial(p), from_roots(Rational(5, 2), {0, -1}),
            "[1,2] E_Q - E_P");
    c.expect((ehrhart_polynomial(q) - ehrhart_polynomial(p)).degree() == 2, "[1,2] E_Q - E_P has degree 2");
    c.note("[1,2]: E_Q - E_P checked as (5/2)n(n+1), the difference of the reference E_Q and E_P, not its factored (5/2)n(n-1)");
  }

  // Triangle (1,0), (0,1), (1,1): series and integrals.
  {
    const auto t = triangle();
    const RationalGF f = gf({"0", "4", "8"}, 5);
    weighted_pair(c, t, "t1^2+t2^2", poly({"0", "1/3", "3/2", "5/3", "1/2"}), &f, "triangle B g");
    c.equal(integral_leading(t, W("2*t1+3*t2", 2)).value, Rational(5, 3), "triangle B integral f");
    c.equal(integral_leading(t, W("t1^2+t2^2", 2)).value, Rational(1, 2), "triangle B integral g");
  }
}

void criterion2(Checks& c) {
  weighted_pair(c, square(), "t1^4*t2^4",
                poly({"0", "0", "1/900", "0", "-1/45", "-1/30", "22/225", "1/3", "23/60", "1/5",
                      "1/25"}),
                nullptr, "square k=4");
  c.equal(weighted_series(square(), W("t1^4*t2^4", 2)),
          gf({"0", "1", "278", "6480", "35402", "60830", "35402", "6480", "278", "1"}, 11),
          "square k=4 series");
}

void criterion3(Checks& c) {
  const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {4, 6}});
  const auto p = edge_polytope(g);
  const WeightPoly w = W("t1*t2*t3*t4*t5*t6*t7", 7);
  c.expect(dimension(p) == 5, "C4+C3 dim P == 5");
  c.equal(ehrhart_polynomial(p), from_roots(Rational(1, 120), {-1, -2, -3, -4}) * poly({"5", "2"}),
          "C4+C3 E_P");
  const UniPoly expected = from_roots(Rational(1, 59875200), {0, 3, 2, 1, -1, -2, -3, -4}) *
                           poly({"-810", "122", "-143", "40", "35"});
  const UniPoly got = weighted_ehrhart_polynomial(p, w);
  c.equal(got, expected, "C4+C3 E_P^w");
  c.expect(got.degree() == 12, "C4+C3 degree 12");
  c.expect(predicted_degree(g, w) == 12, "C4+C3 predicted degree 12");
  for (long n = 0; n <= 3; ++n) {
    c.equal(weighted_sum(p, w, n), 0, "C4+C3 E_P^w(" + std::to_string(n) + ")");
  }
  c.equal(weighted_sum(p, w, 4), 6, "C4+C3 E_P^w(4)");
}

void criterion4(Checks& c) {
  const auto p = P({{1, 1}, {3, 0}, {2, 3}});
  const auto w = LinearWeightTuple::from({{1, 2}});
  c.expect(hilbert_value(p, w, 0) == 1, "hilbert H(0) == 1");
  for (unsigned long n = 1; n <= 8; ++n) {
    c.expect(hilbert_value(p, w, n) == 5 * n - 1, "hilbert H(" + std::to_string(n) + ") == 5n-1");
  }
  const HilbertFit fit = hilbert_polynomial(p, w);
  c.expect(fit.determined && fit.onset == 1, "hilbert fit determined with onset 1");
  c.equal(fit.polynomial, poly({"-1", "5"}), "hilbert Hilbert polynomial");
  c.equal(hilbert_series(p, w), gf({"1", "2", "2"}, 2), "hilbert Hilbert series");
  const ImageGapReport gap = image_gap_report(p, w, 1);
  c.expect(gap.image_points == 4 && gap.hull_points == 6 && gap.strict,
           "hilbert image gap (4, 6, strict)");
  for (unsigned long n = 0; n <= 8; ++n) {
    c.expect(image_gap_report(p, w, n).hull_points == 5 * n + 1,
             "hilbert |n w(P) ∩ Z| == 5n+1 at n=" + std::to_string(n));
  }
}

void criterion5(Checks& c) {
  using namespace ehrwt::testing;
  constexpr int kCases = 50;
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::uniform_int_distribution<long> small(0, 3), num(-5, 5), den(1, 3);

  // E_P^w(0) = w(0), linearity in w, degree bound with equality for
  // monomials on non-degenerate P.
  for (int i = 0; i < kCases; ++i) {
    const std::size_t s = dim(rng);
    const auto p = random_polytope(rng, s, 4);
    const auto u = random_weight(rng, s, 3), v = random_weight(rng, s, 3);
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    const UniPoly eu = weighted_ehrhart_polynomial(p, u);
    const UniPoly ev = weighted_ehrhart_polynomial(p, v);
    c.equal(eu(Rational(0)), u.constant_term(), "E(0) == w(0) for " + u.to_string());
    c.equal(weighted_ehrhart_polynomial(p, a * u + b * v), a * eu + b * ev, "linearity");
    c.expect(eu.degree() <= p.dim() + static_cast<int>(u.degree()), "degree bound");
    const auto m = random_monomial(rng, s, 3);
    if (p.is_non_degenerate()) {
      c.expect(weighted_ehrhart_polynomial(p, m).degree() == p.dim() + static_cast<int>(m.degree()),
               "degree equality for monomial " + m.to_string());
    }
  }

  // Lift path vs interpolation path.
  for (int i = 0; i < kCases; ++i) {
    const std::size_t s = dim(rng);
    const auto p = random_polytope(rng, s, 4);
    std::vector<Rational> row(s);
    bool nonzero = false;
    for (auto& x : row) {
      x = small(rng);
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) row[0] = 1;
    const WeightPoly lin = WeightPoly::affine(row);
    const UniPoly via_lift = ehrhart_polynomial(linear_lift(p, lin)) - ehrhart_polynomial(p);
    c.equal(via_lift, weighted_ehrhart_polynomial(p, lin), "linear lift " + lin.to_string());
    c.equal(gf_of_polynomial(via_lift), weighted_series(p, lin), "linear lift series");
    Rational offset(num(rng), den(rng));
    offset.canonicalize();
    const WeightPoly aff = WeightPoly::affine(row, offset);
    c.equal(weighted_by_affine_lift(p, row, offset).weighted, weighted_ehrhart_polynomial(p, aff),
            "affine lift " + aff.to_string());
  }

  // Reciprocity against brute-force interior sums, monomial weights.
  for (int i = 0; i < kCases; ++i) {
    const std::size_t s = 1 + i % 3;
    const auto p = random_full_polytope(rng, s, 4);
    const auto m = random_monomial(rng, s, 3);
    const UniPoly e = weighted_ehrhart_polynomial(p, m);
    const long sign = (s + m.degree()) % 2 == 0 ? 1 : -1;
    for (long n = 1; n <= 4; ++n) {
      c.equal(brute_force_interior_sum(p, m, n), sign * e(Rational(-n)),
              "reciprocity n=" + std::to_string(n) + " w=" + m.to_string());
    }
  }

  // Vanishing at negative integer roots of E_P for homogeneous w >= 0:
  // nonnegative coefficients on polytopes in the positive orthant.
  std::size_t roots_seen = 0;
  for (int i = 0; i < kCases; ++i) {
    const std::size_t s = 1 + i % 3;
    const auto p = random_full_polytope(rng, s, 4);
    WeightPoly w(s);
    const unsigned degree = 1 + i % 3;
    for (int t = 0; t < 2; ++t) {
      Exponent e(s, 0);
      std::uniform_int_distribution<std::size_t> var(0, s - 1);
      for (unsigned k = 0; k < degree; ++k) ++e[var(rng)];
      w += WeightPoly::monomial(Rational(1 + small(rng)), e);
    }
    const UniPoly ep = ehrhart_polynomial(p);
    const UniPoly ew = weighted_ehrhart_polynomial(p, w);
    for (long r = -1; r >= -static_cast<long>(s + degree); --r) {
      if (ep(Rational(r)) != 0) continue;
      ++roots_seen;
      c.equal(ew(Rational(r)), 0, "vanishing at root " + std::to_string(r) + " of E_P");
    }
    for (const auto& row : check_negative_root_vanishing(p, w)) {
      c.expect(row.vanishes, "check_negative_root_vanishing at " + std::to_string(row.root));
    }
  }
  c.expect(roots_seen > 0, "vanishing suite met at least one negative root");

  // Series algebra.
  for (int i = 0; i < kCases; ++i) {
    std::vector<Rational> coeffs(1 + i % 7);
    for (auto& x : coeffs) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    const UniPoly g(coeffs);
    const auto expanded = gf_of_polynomial(g).expand(12);
    for (long n = 0; n <= 12; ++n) c.equal(expanded[n], g(Rational(n)), "gf round trip");
  }
  for (unsigned d = 0; d <= 8; ++d) {
    for (unsigned k = 0; k <= d + 1; ++k) {
      c.expect(eulerian(d, k) == eulerian_recurrence(d, k),
               "A(" + std::to_string(d) + "," + std::to_string(k) + ") vs recurrence");
    }
    if (d >= 1) {
      c.expect(cube_series(d).numerator().degree() == static_cast<int>(d) - 1,
               "cube series numerator degree d-1");
    }
  }
  for (int i = 0; i < kCases; ++i) {
    const auto p = random_polytope(rng, dim(rng), 4);
    const RationalGF f = ehrhart_series(p);
    bool ok = f.numerator().degree() <= p.dim();
    for (int k = 0; k <= f.numerator().degree(); ++k) {
      ok = ok && is_integer(f.numerator().coeff(k)) && f.numerator().coeff(k) >= 0;
    }
    c.expect(ok, "Stanley nonnegativity of " + f.to_string());
  }
}

void criterion6(Checks& c) {
  const std::string path = "segment_normaliz_input.in";
  {
    std::ofstream f(path);
    f << "amb_space 3\npolytope 2\n2 0 \n0 2 \n";
  }
  const char* argv[] = {"ehrwt", "lift", "--file", path.c_str(), "--weight", "t1+t2",
                        "--format", "json"};
  std::ostringstream out, err;
  const int code = cli::run(8, argv, out, err);
  std::remove(path.c_str());
  c.expect(code == 0, "exit code 0 (got " + std::to_string(code) + "): " + err.str());
  if (code != 0) return;
  const auto j = nlohmann::json::parse(out.str());
  std::vector<Rational> e, h;
  for (const auto& x : j["polynomial"]["coeffs"]) e.push_back(rational_from_string(x.get<std::string>()));
  for (const auto& x : j["series"]["numerator_coeffs"]) h.push_back(rational_from_string(x.get<std::string>()));
  c.equal(UniPoly(e), from_roots(2, {0}) * poly({"1", "2"}), "lift polynomial 2n(1+2n)");
  c.equal(RationalGF(UniPoly(h), j["series"]["denom_power"].get<unsigned>()),
          gf({"0", "6", "2"}, 3), "lift series (6x+2x^2)/(1-x)^3");
  c.expect(j["interpolation_agrees"] == true, "lift agrees with interpolation");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Checks&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "golden polynomials, series, lifts and integrals on small polytopes", criterion1},
      {2, "unit square with w = t1^4 t2^4", criterion2},
      {3, "edge polytope of C4 + C3 with w = t1...t7", criterion3},
      {4, "Hilbert function, series and image gap for w = t1 + 2 t2", criterion4},
      {5, "randomized property suites", criterion5},
      {6, "CLI lift on the Normaliz-subset input for conv{(2,0),(0,2)}", criterion6},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.body(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && checks.failures().empty();
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%zu checks, %.2fs)\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.name, checks.count(), seconds);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (const auto& f : checks.failures()) std::printf("    %s\n", f.c_str());
    for (const auto& n : checks.notes()) std::printf("    note: %s\n", n.c_str());
  }
  return failed;
}
