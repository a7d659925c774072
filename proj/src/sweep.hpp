#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "measures.hpp"
#include "modes.hpp"
#include "states.hpp"

namespace hawkw {

struct PointResult {
  ModeParams params;
  MeasureReport report;
};

// Numeric pipeline at one point: dilate, reduce, optionally damp every
// qubit with the same gamma, measure.
PointResult evaluate(Scenario s, double temperature, double omega, std::optional<double> gamma);
DensityMatrix evaluate_state(Scenario s, const ModeParams& params, std::optional<double> gamma);

enum class GridScale { linear, log };

// `points` temperatures from t_min to t_max inclusive, strictly increasing.
// A log grid needs t_min > 0.
std::vector<double> temperature_grid(double t_min, double t_max, std::size_t points, GridScale scale);

struct SweepConfig {
  Scenario scenario = Scenario::ABC;
  double omega = 1.0;
  double t_min = 0.05;
  double t_max = 10.0;
  std::size_t t_points = 50;
  GridScale t_scale = GridScale::log;
  std::optional<double> gamma;
  bool include_limits = false;  // prepend T = 0, append T = +inf

  void validate() const;
};

struct SweepRow {
  double temperature = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  MeasureReport report;
};

// Rows in increasing T. Points are evaluated on a worker pool of at most
// `workers` threads (0 picks the hardware concurrency).
std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned workers = 0);

}  // namespace hawkw
