#include "sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "channels.hpp"

namespace hawkw {

DensityMatrix evaluate_state(Scenario s, const ModeParams& params, std::optional<double> gamma) {
  DensityMatrix rho = reduce(s, params);
  if (!gamma) return rho;
  const KrausChannel ch = ad_kraus(*gamma);
  const std::array<KrausChannel, 3> per_qubit{ch, ch, ch};
  return apply_product_channel(rho, per_qubit);
}

PointResult evaluate(Scenario s, double temperature, double omega, std::optional<double> gamma) {
  PointResult out;
  out.params = bogoliubov(temperature, omega);
  out.report = full_report(evaluate_state(s, out.params, gamma));
  return out;
}

std::vector<double> temperature_grid(double t_min, double t_max, std::size_t points, GridScale scale) {
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  if (!(t_min >= 0.0) || !(t_max > t_min) || !std::isfinite(t_max))
    throw std::invalid_argument("temperature range must satisfy 0 <= t_min < t_max");
  if (scale == GridScale::log && !(t_min > 0.0)) throw std::invalid_argument("log grid needs t_min > 0");

  std::vector<double> grid(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / last;
    grid[i] = scale == GridScale::linear ? t_min + (t_max - t_min) * f
                                         : std::exp(std::log(t_min) + (std::log(t_max) - std::log(t_min)) * f);
  }
  // Pin the endpoints exactly.
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

void SweepConfig::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("frequency must be positive");
  if (gamma && !(*gamma >= 0.0 && *gamma <= 1.0)) throw std::invalid_argument("damping probability out of range");
  (void)temperature_grid(t_min, t_max, t_points, t_scale);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned workers) {
  config.validate();
  std::vector<double> temps = temperature_grid(config.t_min, config.t_max, config.t_points, config.t_scale);
  if (config.include_limits) {
    if (temps.front() > 0.0) temps.insert(temps.begin(), 0.0);
    temps.push_back(std::numeric_limits<double>::infinity());
  }

  std::vector<SweepRow> rows(temps.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < temps.size(); i = next++) {
      const PointResult p = evaluate(config.scenario, temps[i], config.omega, config.gamma);
      rows[i] = {temps[i], p.params.alpha, p.params.beta, p.report};
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, temps.size()));
  if (workers <= 1) {
    work();
    return rows;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  return rows;
}

}  // namespace hawkw
