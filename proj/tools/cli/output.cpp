#include "cli/cli.hpp"

namespace ehrwt::cli {

std::string format_polynomial(const UniPoly& p) { return p.to_string('n'); }

std::string format_series(const RationalGF& f) { return f.to_string(); }

nlohmann::json polynomial_json(const UniPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"coeffs", coeffs}};
}

nlohmann::json series_json(const RationalGF& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.numerator().coeffs()) coeffs.push_back(to_string(c));
  return {{"numerator_coeffs", coeffs}, {"denom_power", f.denom_power()}};
}

std::string write_output(const Result& result, Format format) {
  if (format == Format::kJson) {
    nlohmann::json j = nlohmann::json::object();
    if (result.polynomial) j["polynomial"] = polynomial_json(*result.polynomial);
    if (result.series) j["series"] = series_json(*result.series);
    return j.dump(2) + "\n";
  }
  std::string out;
  if (result.polynomial) out += "polynomial: " + format_polynomial(*result.polynomial) + "\n";
  if (result.series) out += "series: " + format_series(*result.series) + "\n";
  return out;
}

}  // namespace ehrwt::cli
