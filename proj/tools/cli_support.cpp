#include "cli_support.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace hawkw_cli {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::optional<double> parse_number(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "Inf")
    return std::numeric_limits<double>::infinity();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return v;
}

void write_csv(std::ostream& out, std::span<const hawkw_sweep_row> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.temperature) << ',' << format_number(r.alpha) << ',' << format_number(r.beta) << ','
        << format_number(r.report.c_l1) << ',' << format_number(r.report.foc) << ','
        << format_number(r.report.gc) << ',' << format_number(r.report.cf) << ','
        << format_number(r.report.tradeoff) << ',' << (r.report.cf_clamped ? 1 : 0) << '\n';
  }
}

namespace {

struct Series {
  const char* label;
  const char* color;
  double (*value)(const hawkw_sweep_row&);
};

constexpr std::array<Series, 5> kSeries{{
    {"C_l1", "#1f77b4", [](const hawkw_sweep_row& r) { return r.report.c_l1; }},
    {"D (FOC)", "#ff7f0e", [](const hawkw_sweep_row& r) { return r.report.foc; }},
    {"Q (GC)", "#2ca02c", [](const hawkw_sweep_row& r) { return r.report.gc; }},
    {"F (CF)", "#d62728", [](const hawkw_sweep_row& r) { return r.report.cf; }},
    {"D^2+F", "#9467bd", [](const hawkw_sweep_row& r) { return r.report.tradeoff; }},
}};

std::string fixed(double v, int digits = 2) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& out, std::span<const hawkw_sweep_row> rows, const ChartOptions& options) {
  constexpr double width = 720, height = 480;
  constexpr double left = 70, right = 170, top = 50, bottom = 60;
  const double plot_w = width - left - right, plot_h = height - top - bottom;

  std::vector<const hawkw_sweep_row*> pts;
  for (const auto& r : rows) {
    if (!std::isfinite(r.temperature)) continue;
    if (options.log_x && !(r.temperature > 0.0)) continue;
    pts.push_back(&r);
  }

  auto xval = [&](double t) { return options.log_x ? std::log10(t) : t; };
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  if (!pts.empty()) {
    x_lo = xval(pts.front()->temperature);
    x_hi = xval(pts.back()->temperature);
    for (const auto* r : pts)
      for (const auto& s : kSeries) y_hi = std::max(y_hi, s.value(*r));
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  y_hi = std::ceil(y_hi * 4.0) / 4.0;

  auto px = [&](double t) { return left + (xval(t) - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double v) { return top + (1.0 - (v - y_lo) / (y_hi - y_lo)) * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">"
      << escape_xml(options.title) << "</text>\n";

  // Axes and ticks.
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\"" << fixed(left + plot_w)
      << "\" y2=\"" << fixed(top + plot_h) << "\"/>\n";
  out << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left) << "\" y2=\""
      << fixed(top + plot_h) << "\"/>\n";
  out << "</g>\n";
  constexpr int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double f = static_cast<double>(i) / ticks;
    const double xv = x_lo + f * (x_hi - x_lo);
    const double tx = left + f * plot_w;
    const double label = options.log_x ? std::pow(10.0, xv) : xv;
    out << "<line x1=\"" << fixed(tx) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\"" << fixed(tx)
        << "\" y2=\"" << fixed(top + plot_h + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed(tx) << "\" y=\"" << fixed(top + plot_h + 18) << "\" text-anchor=\"middle\">"
        << fixed(label, label < 1.0 ? 3 : 2) << "</text>\n";
    const double yv = y_lo + f * (y_hi - y_lo);
    const double ty = py(yv);
    out << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(ty) << "\" x2=\"" << fixed(left) << "\" y2=\""
        << fixed(ty) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(ty + 4) << "\" text-anchor=\"end\">"
        << fixed(yv) << "</text>\n";
  }
  out << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(height - 15)
      << "\" text-anchor=\"middle\">Hawking temperature T" << (options.log_x ? " (log scale)" : "") << "</text>\n";
  out << "<text x=\"18\" y=\"" << fixed(top + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << fixed(top + plot_h / 2) << ")\">value</text>\n";

  for (const auto& s : kSeries) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\" points=\"";
    bool first = true;
    for (const auto* r : pts) {
      if (!first) out << ' ';
      out << fixed(px(r->temperature)) << ',' << fixed(py(s.value(*r)));
      first = false;
    }
    out << "\"/>\n";
  }

  // Legend.
  const double lx = left + plot_w + 20;
  for (std::size_t i = 0; i < kSeries.size(); ++i) {
    const double ly = top + 10 + 22.0 * static_cast<double>(i);
    out << "<line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(lx + 24) << "\" y2=\""
        << fixed(ly) << "\" stroke=\"" << kSeries[i].color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fixed(lx + 30) << "\" y=\"" << fixed(ly + 4) << "\">" << escape_xml(kSeries[i].label)
        << "</text>\n";
  }
  out << "</svg>\n";
}

void apply_json_config(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");

  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "scenario") config.scenario = value.get<std::string>();
      else if (key == "omega") config.omega = value.get<double>();
      else if (key == "t_min") config.t_min = value.get<double>();
      else if (key == "t_max") config.t_max = value.get<double>();
      else if (key == "t_points") config.t_points = value.get<std::size_t>();
      else if (key == "t_scale") config.t_scale = value.get<std::string>();
      else if (key == "gamma") {
        if (value.is_null()) config.gamma.reset();
        else config.gamma = value.get<double>();
      } else if (key == "output") config.output = value.get<std::string>();
      else if (key == "format") config.format = value.get<std::string>();
      else if (key == "tolerance") config.tolerance = value.get<double>();
      else if (key == "limits") config.limits = value.get<bool>();
      else throw std::runtime_error("unknown config key: " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad value in config file " + path + ": " + e.what());
  }
}

hawkw_sweep_config to_sweep_config(const RunConfig& config) {
  hawkw_sweep_config c;
  hawkw_sweep_config_init(&c);
  if (hawkw_scenario_parse(config.scenario.c_str(), &c.scenario) != HAWKW_OK)
    throw std::invalid_argument(hawkw_last_error());
  c.omega = config.omega;
  c.t_min = config.t_min;
  c.t_max = config.t_max;
  c.t_points = config.t_points;
  if (config.t_scale == "log") c.t_scale = HAWKW_GRID_LOG;
  else if (config.t_scale == "linear") c.t_scale = HAWKW_GRID_LINEAR;
  else throw std::invalid_argument("t-scale must be linear or log");
  c.has_gamma = config.gamma.has_value() ? 1 : 0;
  c.gamma = config.gamma.value_or(0.0);
  c.include_limits = config.limits ? 1 : 0;
  return c;
}

std::vector<hawkw_sweep_row> run_sweep(const hawkw_sweep_config& config) {
  hawkw_sweep_result* result = nullptr;
  if (hawkw_sweep_run(&config, &result) != HAWKW_OK) throw std::runtime_error(hawkw_last_error());
  std::size_t n = 0;
  hawkw_sweep_result_size(result, &n);
  std::vector<hawkw_sweep_row> rows(n);
  for (std::size_t i = 0; i < n; ++i) hawkw_sweep_result_row(result, i, &rows[i]);
  hawkw_sweep_result_destroy(result);
  return rows;
}

}  // namespace hawkw_cli
