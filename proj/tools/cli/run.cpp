#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cli/cli.hpp"
#include "ehrwt/ehrhart.hpp"
#include "ehrwt/errors.hpp"
#include "ehrwt/series.hpp"
#include "ehrwt/weight_poly.hpp"
#include "ehrwt/wring.hpp"

namespace ehrwt::cli {

namespace {

using nlohmann::json;

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json point_json(std::span<const Integer> p) {
  json row = json::array();
  for (const auto& x : p) row.push_back(integer_json(x));
  return row;
}

std::string point_text(std::span<const Integer> p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + p[i].get_str();
  return s;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

LatticePolytope load_polytope(const JobSpec& job) {
  if (job.inline_vertices.has_value() == job.file.has_value()) {
    throw InputError("give exactly one polytope source: --vertices or --file");
  }
  if (job.inline_vertices) return LatticePolytope(parse_rows(*job.inline_vertices));
  return read_polytope(slurp(*job.file));
}

WeightPoly load_weight(const JobSpec& job, std::size_t vars) {
  return parse_weight(job.weight.value_or("1"), vars);
}

void reject_weight_rows(const JobSpec& job) {
  if (job.weight_rows) {
    throw InputError("--wrows only applies to the hilbert subcommand; use --weight here");
  }
}

// Appends the reciprocity and negative-root report; false if any check failed.
bool check_report(const LatticePolytope& p, const WeightPoly& w, unsigned long n_max,
                  json& j, std::ostream& text, std::ostream& err) {
  if (!spot_check_nonnegative(p, w)) {
    err << "warning: weight is negative at some lattice point of 3P; the vanishing "
           "statement assumes w >= 0 on P\n";
  }
  bool ok = true;
  const auto rows = reciprocity_check(p, w, n_max);
  const unsigned exponent = static_cast<unsigned>(p.ambient_dim() + w.degree());
  text << "reciprocity: interior sum vs (-1)^" << exponent << " * E_P^w(-n)\n";
  json rj = json::array();
  for (const auto& r : rows) {
    text << "  n=" << r.n << " interior=" << to_string(r.interior_sum)
         << " reciprocal=" << to_string(r.reciprocal_value) << (r.holds ? " ok" : " MISMATCH")
         << "\n";
    rj.push_back({{"n", r.n},
                  {"interior_sum", to_string(r.interior_sum)},
                  {"reciprocal_value", to_string(r.reciprocal_value)},
                  {"holds", r.holds}});
    ok = ok && r.holds;
  }
  const auto roots = check_negative_root_vanishing(p, w);
  text << "negative roots of E_P:";
  if (roots.empty()) text << " none";
  text << "\n";
  json vj = json::array();
  for (const auto& r : roots) {
    text << "  r=" << r.root << " E_P^w(r)=" << to_string(r.weighted_value)
         << (r.vanishes ? " vanishes" : " DOES NOT VANISH") << "\n";
    vj.push_back({{"root", r.root},
                  {"weighted_value", to_string(r.weighted_value)},
                  {"vanishes", r.vanishes}});
    ok = ok && r.vanishes;
  }
  j["reciprocity"] = rj;
  j["negative_roots"] = vj;
  return ok;
}

int emit(const JobSpec& job, const json& j, const std::string& text, std::ostream& out) {
  if (job.format == Format::kJson) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
  return kOk;
}

int cmd_points(const JobSpec& job, std::ostream& out) {
  reject_weight_rows(job);
  const LatticePolytope p = load_polytope(job);
  const auto pts = lattice_points(p, job.n);
  json j{{"n", job.n}, {"count", pts.size()}, {"points", json::array()}};
  std::ostringstream text;
  text << "n: " << job.n << "\ncount: " << pts.size() << "\n";
  for (const auto& a : pts) {
    j["points"].push_back(point_json(a));
    text << point_text(a) << "\n";
  }
  return emit(job, j, text.str(), out);
}

int cmd_ehrhart_like(const JobSpec& job, bool weighted, std::ostream& out, std::ostream& err) {
  reject_weight_rows(job);
  const LatticePolytope p = load_polytope(job);
  const WeightPoly w = weighted ? load_weight(job, p.ambient_dim())
                                : WeightPoly::constant(p.ambient_dim(), 1);
  Result r;
  r.polynomial = weighted ? weighted_ehrhart_polynomial(p, w) : ehrhart_polynomial(p);
  r.series = gf_of_polynomial(*r.polynomial);
  json j = json::parse(write_output(r, Format::kJson));
  std::ostringstream text;
  text << write_output(r, Format::kText);
  bool ok = true;
  if (job.check) ok = check_report(p, w, job.max_n.value_or(4), j, text, err);
  emit(job, j, text.str(), out);
  if (!ok) {
    err << "internal consistency error: reciprocity or vanishing check failed\n";
    return kInternalError;
  }
  return kOk;
}

int cmd_lift(const JobSpec& job, std::ostream& out, std::ostream& err) {
  reject_weight_rows(job);
  const LatticePolytope p = load_polytope(job);
  if (!job.weight) throw InputError("lift needs --weight with a linear or affine weight");
  const WeightPoly w = load_weight(job, p.ambient_dim());
  if (!w.is_affine()) throw InputError("lift needs a linear or affine weight");

  const Rational offset = w.constant_term();
  RatVector row;
  for (std::size_t i = 0; i < p.ambient_dim(); ++i) row.push_back(w.linear_coeff(i));
  // A homogeneous weight goes through the linear lift P_w; otherwise Q1.
  const AffineLiftResult lift = [&] {
    if (offset == 0) {
      LatticePolytope pw = linear_lift(p, w);
      UniPoly lifted = ehrhart_polynomial(pw);
      UniPoly base = ehrhart_polynomial(p);
      UniPoly diff = lifted - base;
      return AffineLiftResult{std::move(pw), std::move(lifted), std::move(base), std::move(diff)};
    }
    return weighted_by_affine_lift(p, row, offset);
  }();
  const RationalGF series = gf_of_polynomial(lift.weighted);
  const UniPoly interpolated = weighted_ehrhart_polynomial(p, w);
  const bool agrees = interpolated == lift.weighted;

  json j = json::parse(write_output(Result{lift.weighted, series}, Format::kJson));
  j["lift_vertices"] = json::array();
  for (const auto& v : lift.lift.vertices()) j["lift_vertices"].push_back(point_json(v));
  j["lift_polynomial"] = polynomial_json(lift.lift_polynomial);
  j["base_polynomial"] = polynomial_json(lift.base_polynomial);
  j["interpolation_agrees"] = agrees;

  std::ostringstream text;
  text << (offset == 0 ? "lift P_w vertices:\n" : "lift Q1 vertices:\n");
  for (const auto& v : lift.lift.vertices()) text << point_text(v) << "\n";
  text << "lift polynomial: " << format_polynomial(lift.lift_polynomial) << "\n";
  text << "base polynomial: " << format_polynomial(lift.base_polynomial) << "\n";
  text << write_output(Result{lift.weighted, series}, Format::kText);
  text << "interpolation check: " << (agrees ? "agrees" : "DISAGREES") << "\n";
  emit(job, j, text.str(), out);
  if (!agrees) {
    err << "internal consistency error: lift gives " << format_polynomial(lift.weighted)
        << " but interpolation gives " << format_polynomial(interpolated) << "\n";
    return kInternalError;
  }
  return kOk;
}

int cmd_integral(const JobSpec& job, std::ostream& out, std::ostream& err) {
  reject_weight_rows(job);
  const LatticePolytope p = load_polytope(job);
  const WeightPoly w = load_weight(job, p.ambient_dim());
  const IntegralResult r = integral_leading(p, w);
  if (!spot_check_nonnegative(p, w)) {
    err << "warning: weight is negative at some lattice point of 3P; the leading "
           "coefficient equals the integral only for w >= 0 on P\n";
  }
  if (r.vanishing_leading) {
    err << "warning: the n^(s+p) coefficient vanished although w >= 0 on P was assumed\n";
  }
  json j{{"integral", to_string(r.value)}};
  return emit(job, j, "integral: " + to_string(r.value) + "\n", out);
}

int cmd_hilbert(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.weight) throw InputError("hilbert takes --wrows, not --weight");
  if (!job.weight_rows) throw InputError("hilbert needs --wrows");
  const LatticePolytope p = load_polytope(job);
  const LinearWeightTuple weights(parse_rows(*job.weight_rows));
  HilbertOptions options;
  if (job.max_n) options.n_max = *job.max_n;
  const HilbertFit fit = hilbert_polynomial(p, weights, options);

  json j{{"values", json::array()}, {"determined", fit.determined}};
  std::ostringstream text;
  text << "H(n), n = 0.." << fit.samples.size() - 1 << ":";
  for (std::size_t i = 0; i < fit.samples.size(); ++i) {
    text << (i ? ", " : " ") << fit.samples[i];
    j["values"].push_back(fit.samples[i]);
  }
  text << "\n";
  if (!fit.determined) {
    emit(job, j, text.str(), out);
    err << "error: Hilbert polynomial undetermined within n <= " << options.n_max
        << " (raise --max-n)\n";
    return kInputError;
  }
  const RationalGF series = hilbert_series(fit);
  j.update(json::parse(write_output(Result{fit.polynomial, series}, Format::kJson)));
  j["onset"] = fit.onset;
  text << "polynomial: " << format_polynomial(fit.polynomial) << " (n>=" << fit.onset << ")\n";
  text << "series: " << format_series(series) << "\n";
  const ImageGapReport gap = image_gap_report(p, weights, job.n);
  j["image_gap"] = {{"n", job.n},
                    {"image_points", gap.image_points},
                    {"hull_points", gap.hull_points},
                    {"strict", gap.strict}};
  text << "image gap at n=" << job.n << ": " << gap.image_points << " of " << gap.hull_points
       << (gap.strict ? " (strict)" : " (equal)") << "\n";
  return emit(job, j, text.str(), out);
}

int cmd_eulerian(const JobSpec& job, std::ostream& out) {
  json j{{"d", job.d}, {"row", json::array()}};
  std::ostringstream text;
  text << "A(" << job.d << ",k), k = 0.." << job.d << ":";
  for (unsigned k = 0; k <= job.d; ++k) {
    const Integer a = eulerian(job.d, k);
    j["row"].push_back(a.get_str());
    text << " " << a.get_str();
  }
  text << "\n";
  return emit(job, j, text.str(), out);
}

int cmd_check(const JobSpec& job, std::ostream& out, std::ostream& err) {
  reject_weight_rows(job);
  const LatticePolytope p = load_polytope(job);
  const WeightPoly w = load_weight(job, p.ambient_dim());
  json j = json::object();
  std::ostringstream text;
  const bool ok = check_report(p, w, job.max_n.value_or(4), j, text, err);
  emit(job, j, text.str(), out);
  if (!ok) {
    err << "internal consistency error: reciprocity or vanishing check failed\n";
    return kInternalError;
  }
  return kOk;
}

}  // namespace

int execute(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.subcommand == "points") return cmd_points(job, out);
    if (job.subcommand == "ehrhart") return cmd_ehrhart_like(job, false, out, err);
    if (job.subcommand == "weighted") return cmd_ehrhart_like(job, true, out, err);
    if (job.subcommand == "lift") return cmd_lift(job, out, err);
    if (job.subcommand == "integral") return cmd_integral(job, out, err);
    if (job.subcommand == "hilbert") return cmd_hilbert(job, out, err);
    if (job.subcommand == "eulerian") return cmd_eulerian(job, out);
    if (job.subcommand == "check") return cmd_check(job, out, err);
    err << "error: unknown subcommand '" << job.subcommand << "'\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kInternalError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Ehrhart polynomials and series of lattice polytopes"};
  app.require_subcommand(1);
  JobSpec job;
  std::string format = "text";
  std::optional<unsigned long> n;

  struct Spec {
    const char* name;
    const char* help;
    bool polytope, weight, wrows, dilation, max_n, check;
  };
  const Spec specs[] = {
      {"points", "list the lattice points of nP", true, false, false, true, false, false},
      {"ehrhart", "Ehrhart polynomial and series", true, false, false, false, true, true},
      {"weighted", "weighted Ehrhart polynomial and series by interpolation", true, true, false,
       false, true, true},
      {"lift", "weighted Ehrhart polynomial through a linear or affine lift", true, true, false,
       false, false, false},
      {"integral", "integral of a homogeneous weight via the leading coefficient", true, true,
       false, false, false, false},
      {"hilbert", "Hilbert function, polynomial and series of the weighted Ehrhart ring", true,
       false, true, true, true, false},
      {"eulerian", "row of Eulerian numbers A(d,k)", false, false, false, false, false, false},
      {"check", "reciprocity and negative-root vanishing report", true, true, false, false, true,
       false},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (s.polytope) {
      sub->add_option("--vertices", job.inline_vertices, "inline vertices, rows separated by ';'");
      sub->add_option("-f,--file", job.file, "polytope file (native or Normaliz subset), '-' for stdin");
    }
    if (s.weight) sub->add_option("--weight", job.weight, "weight expression in t1..ts");
    if (s.wrows) sub->add_option("--wrows", job.weight_rows, "linear weight rows, ';'-separated");
    if (s.dilation) sub->add_option("--n", n, "dilation factor");
    if (s.max_n) sub->add_option("--max-n", job.max_n, "largest n sampled");
    if (s.check) sub->add_flag("--check", job.check, "append the reciprocity/vanishing report");
    if (std::string_view(s.name) == "eulerian") {
      sub->add_option("--d", job.d, "dimension d")->required();
    }
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  job.subcommand = app.get_subcommands().front()->get_name();
  job.format = format == "json" ? Format::kJson : Format::kText;
  if (n) job.n = *n;
  return execute(job, out, err);
}

}  // namespace ehrwt::cli
