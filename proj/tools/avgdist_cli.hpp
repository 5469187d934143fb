#pragma once

// Command-line front end: reads matrices or spectra, writes one JSON
// document per invocation. Exit codes: 0 success, 2 input/usage errors,
// 3 numerical failures.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "avgdist/avgdist.hpp"

#ifndef AVGDIST_VERSION
#define AVGDIST_VERSION "0.0.0"
#endif

namespace avgdist::cli {

using nlohmann::json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 2;
inline constexpr int exit_numerical = 3;

enum class FileFormat { Csv, Json };

// ---------------------------------------------------------------- parsing

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw input_error("not a number: '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FileFormat detect_format(const std::string& path, const std::string& override_format) {
  if (override_format == "csv") return FileFormat::Csv;
  if (override_format == "json") return FileFormat::Json;
  return std::filesystem::path(path).extension() == ".json" ? FileFormat::Json : FileFormat::Csv;
}

// Non-empty lines that are not '#' comments.
inline std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (!t.empty() && t.front() != '#') lines.emplace_back(t);
  }
  return lines;
}

inline json parse_json_document(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
}

inline std::vector<double> json_reals(const json& array, const std::string& what) {
  if (!array.is_array()) throw input_error(what + " must be an array");
  std::vector<double> out;
  for (const auto& v : array) {
    if (!v.is_number()) throw input_error(what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

inline DenseMatrix read_matrix(const std::string& path, FileFormat format) {
  const auto text = read_file(path);
  std::vector<std::vector<double>> rows;
  if (format == FileFormat::Json) {
    const auto doc = parse_json_document(text, path);
    if (!doc.is_object() || !doc.contains("matrix")) throw input_error("expected {\"matrix\": [[...]]} in '" + path + "'");
    if (!doc["matrix"].is_array()) throw input_error("\"matrix\" must be an array of rows");
    for (const auto& row : doc["matrix"]) rows.push_back(json_reals(row, "matrix row"));
  } else {
    for (const auto& line : content_lines(text)) rows.push_back(parse_real_list(line));
  }
  if (rows.empty()) throw input_error("matrix file '" + path + "' is empty");
  return DenseMatrix::from_rows(rows);
}

inline std::vector<double> read_sigma_file(const std::string& path, FileFormat format) {
  const auto text = read_file(path);
  if (format == FileFormat::Json) {
    const auto doc = parse_json_document(text, path);
    if (!doc.is_object() || !doc.contains("sigmas")) throw input_error("expected {\"sigmas\": [...]} in '" + path + "'");
    return json_reals(doc["sigmas"], "sigmas");
  }
  std::vector<double> values;
  for (const auto& line : content_lines(text)) values.push_back(parse_real(line));
  if (values.empty()) throw input_error("sigma file '" + path + "' is empty");
  return values;
}

/// --sigmas accepts either a path to an existing file or an inline list.
inline std::vector<double> read_sigmas_arg(const std::string& arg, const std::string& format) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_sigma_file(arg, detect_format(arg, format));
  return parse_real_list(arg);
}

// ---------------------------------------------------------------- JSON

inline json to_json(const GammaLogCombination& c) {
  return {{"rational", to_string(c.rational)},
          {"gamma_coeff", to_string(c.gamma_coeff)},
          {"log2_coeff", to_string(c.log2_coeff)},
          {"value", c.to_real()}};
}

inline json to_json(const DistortionEstimate& e) {
  json j = {{"value", e.value}, {"method", std::string(to_string(e.method))}};
  if (e.std_error) j["std_error"] = *e.std_error;
  if (e.samples_used) j["samples_used"] = *e.samples_used;
  if (e.skipped) j["skipped"] = *e.skipped;
  return j;
}

inline json to_json(const BoundsReport& b) {
  return {{"half_log_sum_sq", b.half_log_sum_sq}, {"lower", b.lower}, {"upper", b.upper},
          {"j_lower", b.j_lower}, {"j_upper", b.j_upper}, {"gap", b.gap}};
}

inline json to_json(const LlnDiagnostics& d) {
  json cond = json::array();
  for (double c : d.condition_numbers) cond.push_back(std::isinf(c) ? json(nullptr) : json(c));
  return {{"dims", d.dims},
          {"ratios", d.ratios},
          {"deviations", d.deviations},
          {"condition_numbers", cond},
          {"hypothesis",
           {{"ratios_decreasing", d.hypothesis.ratios_decreasing},
            {"max_condition_number", std::isinf(d.hypothesis.max_condition_number)
                                         ? json(nullptr)
                                         : json(d.hypothesis.max_condition_number)},
            {"ratio_bound_holds", d.hypothesis.ratio_bound_holds}}}};
}

// ---------------------------------------------------------------- commands

/// Exact constants of the n-dimensional problem.
inline json cmd_constants(std::size_t n) {
  const SphereDimension dim(n);
  const auto mean = mean_log_coordinate(dim);
  const auto xi = xi_paper(dim);
  return {{"n", n},
          {"psi_half", to_json(digamma_half(dim))},
          {"mean_log_coordinate", to_json(mean)},
          {"xi_paper", to_json(xi)},
          {"agrees", xi == mean},
          {"sphere_area", sphere_area(dim)},
          {"bound_gap", n >= 2 ? json(bound_gap(dim)) : json(nullptr)},
          {"bound_gap_limit", bound_gap_limit},
          {"bound_gap_stated_limit", bound_gap_stated_limit}};
}

enum class Method { Mc, Quad, Auto };

struct ComputeOptions {
  std::optional<std::string> matrix_path;
  std::optional<std::string> sigmas;
  std::string format;
  Method method = Method::Auto;
  McConfig mc;
  QuadConfig quad;
};

inline json cmd_compute(const ComputeOptions& opt) {
  if (opt.matrix_path.has_value() == opt.sigmas.has_value()) {
    throw input_error("exactly one of --matrix or --sigmas is required");
  }
  const auto spectrum = opt.matrix_path
                            ? singular_values(read_matrix(*opt.matrix_path, detect_format(*opt.matrix_path, opt.format)))
                            : spectrum_from_values(read_sigmas_arg(*opt.sigmas, opt.format));

  DistortionEstimate estimate;
  switch (opt.method) {
    case Method::Mc: estimate = mc_estimate(spectrum, opt.mc); break;
    case Method::Quad: estimate = quad_estimate(spectrum, opt.quad); break;
    case Method::Auto: {
      auto exact = closed_form(spectrum);
      estimate = exact ? *exact : quad_estimate(spectrum, opt.quad);
      break;
    }
  }

  const auto bounds = distortion_bounds(spectrum);
  if (estimate.method == EstimateMethod::Quadrature) {
    const double slack = 2.0 * opt.quad.abs_tol;
    if (estimate.value < bounds.lower - slack || estimate.value > bounds.upper + slack) {
      throw numerical_error("quadrature estimate lies outside the sharp bounds");
    }
  }

  static constexpr std::string_view method_names[] = {"mc", "quad", "auto"};
  return {{"dim", spectrum.size()},
          {"sigmas", std::vector<double>(spectrum.sigmas().begin(), spectrum.sigmas().end())},
          {"estimate", to_json(estimate)},
          {"bounds", to_json(bounds)},
          {"constants", cmd_constants(spectrum.size())},
          {"provenance",
           {{"tool", "avgdist"},
            {"version", AVGDIST_VERSION},
            {"method", std::string(method_names[static_cast<int>(opt.method)])},
            {"seed", opt.mc.seed},
            {"samples", opt.mc.samples},
            {"mode", std::string(to_string(opt.mc.mode))},
            {"tol", opt.quad.abs_tol},
            {"max_subdivisions", opt.quad.max_subdivisions}}}};
}

inline json cmd_lln(const std::string& sigma_file, const std::string& format, const std::vector<std::size_t>& dims,
                    const QuadConfig& quad) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(sigma_file, ec)) throw input_error("'" + sigma_file + "' is not a file");
  const auto values = read_sigma_file(sigma_file, detect_format(sigma_file, format));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw input_error("entry " + std::to_string(i) + " of '" + sigma_file + "' is not a positive number");
    }
  }
  if (dims.empty()) throw input_error("--dims is required");
  json j = to_json(lln_scan(values, dims, quad));
  j["provenance"] = {{"tool", "avgdist"}, {"version", AVGDIST_VERSION}, {"tol", quad.abs_tol},
                     {"max_subdivisions", quad.max_subdivisions}};
  return j;
}

// ---------------------------------------------------------------- driver

inline void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  err << json{{"error", std::string(message)}, {"kind", std::string(kind)}}.dump() << '\n';
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Average distortion of a linear map: the mean of log|Au| over the unit sphere"};
  app.name("avgdist");
  app.require_subcommand(1);
  app.set_version_flag("--version", AVGDIST_VERSION);

  ComputeOptions copt;
  std::string matrix_path, sigmas_arg, method = "auto", mode = "projection", format;
  std::uint64_t samples = 100000, seed = 0;
  double tol = 1e-10;
  std::size_t n = 0;
  std::vector<std::size_t> dims;

  const auto positive_tol = CLI::Range(std::numeric_limits<double>::min(), 1e-2);

  auto* compute = app.add_subcommand("compute", "Estimate the average distortion of a matrix or spectrum");
  auto* m_opt = compute->add_option("--matrix", matrix_path, "Square matrix file (.csv rows or .json {\"matrix\": ...})");
  compute->add_option("--sigmas", sigmas_arg, "Singular values: comma list or file (.csv lines or .json {\"sigmas\": ...})")
      ->excludes(m_opt);
  compute->add_option("--method", method, "mc, quad or auto (closed form when available, else quad)")
      ->check(CLI::IsMember({"mc", "quad", "auto"}));
  compute->add_option("--samples", samples, "Monte Carlo samples")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  compute->add_option("--seed", seed, "Monte Carlo seed");
  compute->add_option("--mode", mode, "Monte Carlo mode: projection or reduction")
      ->check(CLI::IsMember({"projection", "reduction"}));
  compute->add_option("--tol", tol, "Quadrature absolute tolerance")->check(positive_tol);
  compute->add_option("--format", format, "Override file format detection: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* constants = app.add_subcommand("constants", "Exact constants for dimension n");
  constants->add_option("--n", n, "Dimension n >= 1")->required();

  auto* lln = app.add_subcommand("lln", "Law-of-large-numbers scan over prefixes of a sigma sequence");
  lln->add_option("--sigmas", sigmas_arg, "File of positive values, one per line")->required();
  lln->add_option("--dims", dims, "Strictly increasing prefix lengths, comma separated")->delimiter(',')->required();
  lln->add_option("--tol", tol, "Quadrature absolute tolerance")->check(positive_tol);
  lln->add_option("--format", format, "Override file format detection: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << AVGDIST_VERSION << '\n';
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return exit_input;
  }

  try {
    json result;
    if (compute->parsed()) {
      if (!matrix_path.empty()) copt.matrix_path = matrix_path;
      if (!sigmas_arg.empty()) copt.sigmas = sigmas_arg;
      copt.format = format;
      copt.method = method == "mc" ? Method::Mc : method == "quad" ? Method::Quad : Method::Auto;
      copt.mc = {samples, seed, mode == "reduction" ? McMode::GaussianReduction : McMode::Projection};
      copt.quad.abs_tol = tol;
      result = cmd_compute(copt);
    } else if (constants->parsed()) {
      result = cmd_constants(n);
    } else {
      QuadConfig quad;
      quad.abs_tol = tol;
      result = cmd_lln(sigmas_arg, format, dims, quad);
    }
    out << result.dump() << '\n';
    return exit_ok;
  } catch (const input_error& e) {
    report_error(err, "input", e.what());
    return exit_input;
  } catch (const numerical_error& e) {
    report_error(err, "numerical", e.what());
    return exit_numerical;
  }
}

}  // namespace avgdist::cli
