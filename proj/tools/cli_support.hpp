#pragma once

// Output formatting and run configuration for the hawkw command line tool.
// Only the public C API is used here.

#include <hawkw/hawkw.h>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hawkw_cli {

inline constexpr std::string_view kCsvHeader = "T,alpha,beta,c_l1,foc,gc,cf,tradeoff,cf_clamped";

// Shortest decimal string that parses back to exactly `v`; "inf" for +inf.
std::string format_number(double v);

// Accepts anything std::from_chars does plus "inf" / "+inf" / "infinity".
std::optional<double> parse_number(std::string_view text);

void write_csv(std::ostream& out, std::span<const hawkw_sweep_row> rows);

struct ChartOptions {
  std::string title;
  bool log_x = false;  // log10 axis; rows with T <= 0 are skipped
};

// Self-contained SVG line chart, one polyline per measure. Rows with
// non-finite T are skipped.
void write_svg(std::ostream& out, std::span<const hawkw_sweep_row> rows, const ChartOptions& options);

struct RunConfig {
  std::string scenario = "ABC";
  double omega = 1.0;
  double t_min = 0.05;
  double t_max = 10.0;
  std::size_t t_points = 50;
  std::string t_scale = "log";
  std::optional<double> gamma;
  std::optional<std::string> output;
  std::string format = "csv";
  double tolerance = 1e-10;
  bool limits = false;
};

// Overlays the keys present in a JSON object onto `config`. Throws
// std::runtime_error for unreadable files, malformed JSON or unknown keys.
void apply_json_config(RunConfig& config, const std::string& path);

// Fills a C sweep config; throws std::invalid_argument for bad names.
hawkw_sweep_config to_sweep_config(const RunConfig& config);

// Sweep through the C API; throws std::runtime_error with the library
// message on failure.
std::vector<hawkw_sweep_row> run_sweep(const hawkw_sweep_config& config);

}  // namespace hawkw_cli
