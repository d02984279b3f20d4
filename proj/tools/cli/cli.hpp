#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ehrwt/polytope.hpp"
#include "ehrwt/rational_gf.hpp"
#include "ehrwt/unipoly.hpp"

namespace ehrwt::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2 };

enum class Format { kText, kJson };

/// Everything one invocation needs, after argv has been parsed.
struct JobSpec {
  std::string subcommand;
  std::optional<std::string> inline_vertices;  // "0 0; 1 0; ..."
  std::optional<std::string> file;             // path, or "-" for stdin
  std::optional<std::string> weight;           // defaults to "1" where used
  std::optional<std::string> weight_rows;      // "1 2; 0 1"
  unsigned long n = 1;
  std::optional<unsigned long> max_n;
  unsigned d = 1;
  Format format = Format::kText;
  bool check = false;
};

// Native ("vertices m s" + m rows) or Normaliz subset ("amb_space N",
// "polytope m", m rows of N-1 integers). C-style comments are ignored.
// Throws ParseError with the byte offset of the problem.
LatticePolytope read_polytope(std::string_view text);

// "vertices m s" followed by one row per vertex.
std::string write_native(const LatticePolytope& polytope);

// "1 2; 0 1" -> rows; used for --vertices and --wrows.
std::vector<IntVector> parse_rows(std::string_view text);

struct Result {
  std::optional<UniPoly> polynomial;
  std::optional<RationalGF> series;
};

std::string format_polynomial(const UniPoly& p);
std::string format_series(const RationalGF& f);

nlohmann::json polynomial_json(const UniPoly& p);
nlohmann::json series_json(const RationalGF& f);

// Text: "polynomial: ..." and "series: ..." lines for the present fields.
// Json: {"polynomial": {"coeffs": [...]}, "series": {"numerator_coeffs":
// [...], "denom_power": D}}, rationals as "p/q" strings, ascending powers.
std::string write_output(const Result& result, Format format);

// Executes a parsed job; returns the process exit code.
int execute(const JobSpec& job, std::ostream& out, std::ostream& err);

// Parses argv and executes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ehrwt::cli
