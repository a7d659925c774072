#include "cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "cli_support.hpp"

namespace hawkw_cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by the sweep-like commands; values only apply when given.
struct CommonFlags {
  std::string config_path;
  std::string scenario;
  double omega = 0.0;
  std::string gamma;
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t t_points = 0;
  std::string t_scale;
  std::string output;
  std::string format;
  double tolerance = 0.0;

  CLI::Option* o_config = nullptr;
  CLI::Option* o_scenario = nullptr;
  CLI::Option* o_omega = nullptr;
  CLI::Option* o_gamma = nullptr;
  CLI::Option* o_t_min = nullptr;
  CLI::Option* o_t_max = nullptr;
  CLI::Option* o_t_points = nullptr;
  CLI::Option* o_t_scale = nullptr;
  CLI::Option* o_output = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_tolerance = nullptr;

  void add_config(CLI::App* app) {
    o_config = app->add_option("--config", config_path, "JSON file with default values; flags override it");
  }
  void add_point(CLI::App* app) {
    o_scenario = app->add_option("--scenario", scenario, "Kept modes: ABC, Abc or ABc")
                     ->check(CLI::IsMember({"ABC", "Abc", "ABc"}));
    o_omega = app->add_option("--omega", omega, "Mode frequency (default 1)");
  }
  void add_gamma(CLI::App* app, const char* help) { o_gamma = app->add_option("--gamma", gamma, help); }
  void add_grid(CLI::App* app) {
    o_t_min = app->add_option("--t-min", t_min, "Lowest grid temperature");
    o_t_max = app->add_option("--t-max", t_max, "Highest grid temperature");
    o_t_points = app->add_option("--t-points", t_points, "Number of grid points");
    o_t_scale = app->add_option("--t-scale", t_scale, "Grid spacing")->check(CLI::IsMember({"linear", "log"}));
  }
  void add_output(CLI::App* app, const char* help) {
    o_output = app->add_option("--output", output, help);
    o_format = app->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  }
  void add_tolerance(CLI::App* app) {
    o_tolerance = app->add_option("--tolerance", tolerance, "Largest accepted absolute deviation");
  }

  // Defaults, then the JSON file, then explicit flags.
  RunConfig resolve(bool gamma_allows_none) const {
    RunConfig cfg;
    if (o_config && o_config->count()) {
      try {
        apply_json_config(cfg, config_path);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
    }
    auto given = [](const CLI::Option* o) { return o != nullptr && o->count() > 0; };
    if (given(o_scenario)) cfg.scenario = scenario;
    if (given(o_omega)) cfg.omega = omega;
    if (given(o_gamma)) {
      if (gamma_allows_none && gamma == "none") {
        cfg.gamma.reset();
      } else {
        const auto g = parse_number(gamma);
        if (!g) throw UsageError("--gamma expects a number in [0, 1]");
        cfg.gamma = *g;
      }
    }
    if (given(o_t_min)) cfg.t_min = t_min;
    if (given(o_t_max)) cfg.t_max = t_max;
    if (given(o_t_points)) cfg.t_points = t_points;
    if (given(o_t_scale)) cfg.t_scale = t_scale;
    if (given(o_output)) cfg.output = output;
    if (given(o_format)) cfg.format = format;
    if (given(o_tolerance)) cfg.tolerance = tolerance;

    if (cfg.gamma && !(*cfg.gamma >= 0.0 && *cfg.gamma <= 1.0))
      throw UsageError("damping probability out of range");
    if (!(cfg.omega > 0.0)) throw UsageError("frequency must be positive");
    if (cfg.format != "csv" && cfg.format != "svg") throw UsageError("format must be csv or svg");
    return cfg;
  }
};

std::string sig12(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

hawkw_scenario scenario_or_throw(const std::string& name) {
  hawkw_scenario s;
  if (hawkw_scenario_parse(name.c_str(), &s) != HAWKW_OK) throw UsageError(hawkw_last_error());
  return s;
}

hawkw_sweep_config sweep_config_or_throw(const RunConfig& cfg) {
  try {
    return to_sweep_config(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<hawkw_sweep_row> sweep_or_throw(const hawkw_sweep_config& c) {
  try {
    return run_sweep(c);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open output file: " + path.string());
  f << content;
  f.close();
  if (!f) throw UsageError("failed writing output file: " + path.string());
}

std::string render(const std::vector<hawkw_sweep_row>& rows, const std::string& format, const ChartOptions& chart) {
  std::ostringstream os;
  if (format == "svg") write_svg(os, rows, chart);
  else write_csv(os, rows);
  return os.str();
}

int cmd_eval(const std::string& t_text, const CommonFlags& flags, std::ostream& out) {
  const RunConfig cfg = flags.resolve(false);
  const auto t = parse_number(t_text);
  if (!t) throw UsageError("--T expects a number or 'inf'");

  hawkw_point p{scenario_or_throw(cfg.scenario), *t, cfg.omega, cfg.gamma ? 1 : 0, cfg.gamma.value_or(0.0)};
  hawkw_mode_params params;
  hawkw_report r;
  if (hawkw_evaluate(&p, &params, &r) != HAWKW_OK) throw UsageError(hawkw_last_error());

  out << "scenario   = " << cfg.scenario << '\n'
      << "T          = " << sig12(*t) << '\n'
      << "omega      = " << sig12(cfg.omega) << '\n'
      << "gamma      = " << (cfg.gamma ? sig12(*cfg.gamma) : std::string("none")) << '\n'
      << "alpha      = " << sig12(params.alpha) << '\n'
      << "beta       = " << sig12(params.beta) << '\n'
      << "c_l1       = " << sig12(r.c_l1) << '\n'
      << "foc        = " << sig12(r.foc) << '\n'
      << "gc         = " << sig12(r.gc) << '\n'
      << "cf         = " << sig12(r.cf) << '\n'
      << "tradeoff   = " << sig12(r.tradeoff) << '\n'
      << "cf_clamped = " << r.cf_clamped << '\n';
  return kExitOk;
}

int cmd_sweep(bool limits, const CommonFlags& flags, std::ostream& out) {
  RunConfig cfg = flags.resolve(false);
  if (limits) cfg.limits = true;
  if (!cfg.output) throw UsageError("--output is required");
  const auto rows = sweep_or_throw(sweep_config_or_throw(cfg));
  ChartOptions chart{"Scenario " + cfg.scenario + (cfg.gamma ? ", gamma=" + format_number(*cfg.gamma) : ""),
                     cfg.t_scale == "log"};
  const std::string content = render(rows, cfg.format, chart);
  if (*cfg.output == "-") out << content;
  else write_file(*cfg.output, content);
  return kExitOk;
}

struct FigureSpec {
  const char* scenario;
  bool damped;
};

const std::map<std::string, FigureSpec>& figures() {
  static const std::map<std::string, FigureSpec> table{
      {"fig1", {"ABC", false}}, {"fig2", {"Abc", false}}, {"fig3", {"ABc", false}},
      {"fig4", {"ABC", true}},  {"fig5", {"Abc", true}},  {"fig6", {"ABc", true}},
  };
  return table;
}

std::string gamma_tag(double g) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", g);
  return buf;
}

int cmd_figure(const std::string& id, const std::string& out_dir, const std::vector<double>& gammas,
               const CommonFlags& flags, std::ostream& out) {
  const auto it = figures().find(id);
  if (it == figures().end()) throw UsageError("unknown figure id: " + id + " (expected fig1..fig6)");
  RunConfig cfg = flags.resolve(false);
  cfg.scenario = it->second.scenario;
  cfg.limits = true;

  std::vector<std::optional<double>> runs;
  if (it->second.damped) {
    const std::vector<double> set = gammas.empty() ? std::vector<double>{1.0 / 3.0, 0.5, 2.0 / 3.0} : gammas;
    for (double g : set) {
      if (!(g >= 0.0 && g <= 1.0)) throw UsageError("damping probability out of range");
      runs.emplace_back(g);
    }
  } else {
    runs.emplace_back(std::nullopt);
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  for (const auto& g : runs) {
    cfg.gamma = g;
    const auto rows = sweep_or_throw(sweep_config_or_throw(cfg));
    const std::string stem = g ? id + "_g" + gamma_tag(*g) : id;
    const std::filesystem::path csv = std::filesystem::path(out_dir) / (stem + ".csv");
    write_file(csv, render(rows, "csv", {}));
    out << "wrote " << csv.string() << '\n';
    if (cfg.format == "svg") {
      ChartOptions chart{id + ": scenario " + cfg.scenario + ", omega=" + format_number(cfg.omega) +
                             (g ? ", gamma=" + gamma_tag(*g) : ""),
                         cfg.t_scale == "log"};
      const std::filesystem::path svg = std::filesystem::path(out_dir) / (stem + ".svg");
      write_file(svg, render(rows, "svg", chart));
      out << "wrote " << svg.string() << '\n';
    }
  }
  return kExitOk;
}

struct Failure {
  std::string scenario;
  double temperature;
  std::optional<double> gamma;
  hawkw_deviation dev;
  bool clamp_mismatch;
};

int cmd_verify(bool printed_tables, const CommonFlags& flags, std::ostream& out) {
  const RunConfig cfg = flags.resolve(true);
  if (!(cfg.tolerance > 0.0)) throw UsageError("--tolerance must be positive");

  std::vector<std::string> scenarios{"ABC", "Abc", "ABc"};
  if (flags.o_scenario->count() || (flags.o_config->count() && cfg.scenario != RunConfig{}.scenario))
    scenarios = {cfg.scenario};
  std::vector<std::optional<double>> gammas{std::nullopt, 1.0 / 3.0, 0.5, 2.0 / 3.0};
  if (flags.o_gamma->count()) gammas = {cfg.gamma};

  const hawkw_sweep_config grid_cfg = sweep_config_or_throw(cfg);
  std::vector<double> temps(grid_cfg.t_points);
  if (hawkw_temperature_grid(grid_cfg.t_min, grid_cfg.t_max, grid_cfg.t_points, grid_cfg.t_scale, temps.data()) !=
      HAWKW_OK)
    throw UsageError(hawkw_last_error());
  if (temps.front() > 0.0) temps.insert(temps.begin(), 0.0);
  temps.push_back(std::numeric_limits<double>::infinity());

  const hawkw_entry_table table = printed_tables ? HAWKW_TABLE_PRINTED : HAWKW_TABLE_CORRECTED;
  std::vector<Failure> failures;
  std::size_t points = 0;
  out << "verify: " << temps.size() << " temperatures x " << gammas.size() << " channel settings, tolerance "
      << format_number(cfg.tolerance) << (printed_tables ? ", printed tables" : "") << '\n';
  for (const auto& name : scenarios) {
    const hawkw_scenario s = scenario_or_throw(name);
    hawkw_deviation worst{};
    worst.abs_dev = -1.0;
    double worst_t = 0.0;
    std::optional<double> worst_g;
    std::size_t scenario_failures = 0;
    for (const auto& g : gammas) {
      for (double t : temps) {
        hawkw_point p{s, t, cfg.omega, g ? 1 : 0, g.value_or(0.0)};
        hawkw_verify_result* res = nullptr;
        if (hawkw_verify(&p, table, &res) != HAWKW_OK) throw UsageError(hawkw_last_error());
        hawkw_deviation d;
        int clamp_ok = 1;
        hawkw_verify_result_worst(res, &d, &clamp_ok);
        hawkw_verify_result_destroy(res);
        ++points;
        if (d.abs_dev > worst.abs_dev) {
          worst = d;
          worst_t = t;
          worst_g = g;
        }
        if (!(d.abs_dev < cfg.tolerance) || !clamp_ok) {
          failures.push_back({name, t, g, d, !clamp_ok});
          ++scenario_failures;
        }
      }
    }
    const std::string where = std::string(worst.quantity) + (worst.entry[0] ? std::string(" ") + worst.entry : "");
    out << "  " << name << ": max deviation " << format_number(worst.abs_dev) << " (" << where
        << " at T=" << format_number(worst_t) << ", gamma=" << (worst_g ? format_number(*worst_g) : "none")
        << ") " << (scenario_failures == 0 ? "PASS" : "FAIL") << '\n';
  }

  if (failures.empty()) {
    out << "all " << points << " points within tolerance\n";
    return kExitOk;
  }
  out << failures.size() << " of " << points << " points failed:\n";
  for (const auto& f : failures) {
    out << "  scenario=" << f.scenario << " T=" << format_number(f.temperature)
        << " gamma=" << (f.gamma ? format_number(*f.gamma) : "none") << " quantity=" << f.dev.quantity;
    if (f.dev.entry[0]) out << " entry=" << f.dev.entry;
    out << " numeric=" << format_number(f.dev.numeric) << " closed=" << format_number(f.dev.closed)
        << " deviation=" << format_number(f.dev.abs_dev);
    if (f.clamp_mismatch) out << " cf_clamped flags disagree";
    out << '\n';
  }
  return kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"W-state quantumness near a Schwarzschild black hole", "hawkw-cli"};
  app.require_subcommand(1);

  CommonFlags eval_flags, sweep_flags, figure_flags, verify_flags;

  auto* eval = app.add_subcommand("eval", "Evaluate all measures at one point");
  std::string t_text;
  eval->add_option("--T", t_text, "Hawking temperature (number or inf)")->required();
  eval_flags.add_point(eval);
  eval_flags.add_gamma(eval, "Amplitude-damping probability on every qubit");
  eval_flags.add_config(eval);

  auto* sweep = app.add_subcommand("sweep", "Tabulate the measures over a temperature grid");
  bool limits = false;
  sweep_flags.add_point(sweep);
  sweep_flags.add_gamma(sweep, "Amplitude-damping probability on every qubit");
  sweep_flags.add_grid(sweep);
  sweep_flags.add_output(sweep, "Output file, or - for stdout");
  sweep_flags.add_config(sweep);
  sweep->add_flag("--limits", limits, "Add T=0 and T=inf rows");

  auto* figure = app.add_subcommand("figure", "Write the data series of one figure");
  std::string figure_id;
  std::string out_dir = ".";
  std::vector<double> figure_gammas;
  figure->add_option("id", figure_id, "fig1 .. fig6")->required();
  figure->add_option("--output-dir", out_dir, "Directory for the generated files");
  figure->add_option("--gamma", figure_gammas, "Damping probabilities (fig4-fig6; default 1/3 1/2 2/3)");
  figure_flags.add_point(figure);
  figure_flags.add_grid(figure);
  figure_flags.o_format =
      figure->add_option("--format", figure_flags.format, "csv, or svg to add a chart")
          ->check(CLI::IsMember({"csv", "svg"}));
  figure_flags.add_config(figure);

  auto* verify = app.add_subcommand("verify", "Compare the numeric pipeline with the closed forms");
  bool printed_tables = false;
  verify_flags.add_point(verify);
  verify_flags.add_gamma(verify, "Restrict to one damping probability, or none");
  verify_flags.add_grid(verify);
  verify_flags.add_tolerance(verify);
  verify_flags.add_config(verify);
  verify->add_flag("--printed-tables", printed_tables, "Use the damped ABc table exactly as published");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(t_text, eval_flags, out);
    if (*sweep) return cmd_sweep(limits, sweep_flags, out);
    if (*figure) return cmd_figure(figure_id, out_dir, figure_gammas, figure_flags, out);
    if (*verify) return cmd_verify(printed_tables, verify_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hawkw_cli
