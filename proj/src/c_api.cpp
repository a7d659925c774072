#include <hawkw/hawkw.h>

#include <cstdio>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>

#include "channels.hpp"
#include "closedform.hpp"
#include "measures.hpp"
#include "modes.hpp"
#include "states.hpp"
#include "sweep.hpp"

struct hawkw_state {
  hawkw::DensityMatrix rho;
};

struct hawkw_sweep_result {
  std::vector<hawkw::SweepRow> rows;
};

struct hawkw_verify_result {
  hawkw::closedform::VerifyReport report;
};

namespace {

thread_local std::string tl_error;

hawkw_status fail(hawkw_status status, const char* msg) {
  tl_error = msg;
  return status;
}

template <class F>
hawkw_status guarded(F&& body) {
  try {
    body();
    tl_error.clear();
    return HAWKW_OK;
  } catch (const std::out_of_range& e) {
    return fail(HAWKW_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HAWKW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(HAWKW_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(HAWKW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HAWKW_ERR_INTERNAL, "unknown error");
  }
}

#define HAWKW_REQUIRE(ptr)                                              \
  do {                                                                  \
    if ((ptr) == nullptr) return fail(HAWKW_ERR_NULL_POINTER, "null pointer: " #ptr); \
  } while (0)

hawkw::Scenario to_scenario(hawkw_scenario s) {
  switch (s) {
    case HAWKW_SCENARIO_ABC: return hawkw::Scenario::ABC;
    case HAWKW_SCENARIO_Abc: return hawkw::Scenario::Abc;
    case HAWKW_SCENARIO_ABc: return hawkw::Scenario::ABc;
    case HAWKW_SCENARIO_AbC: return hawkw::Scenario::AbC;
  }
  throw std::invalid_argument("unknown scenario");
}

hawkw::closedform::EntryTable to_table(hawkw_entry_table t) {
  switch (t) {
    case HAWKW_TABLE_CORRECTED: return hawkw::closedform::EntryTable::corrected;
    case HAWKW_TABLE_PRINTED: return hawkw::closedform::EntryTable::printed;
  }
  throw std::invalid_argument("unknown entry table");
}

hawkw::GridScale to_scale(hawkw_grid_scale s) {
  switch (s) {
    case HAWKW_GRID_LINEAR: return hawkw::GridScale::linear;
    case HAWKW_GRID_LOG: return hawkw::GridScale::log;
  }
  throw std::invalid_argument("unknown grid scale");
}

std::optional<double> gamma_of(int has_gamma, double gamma) {
  if (!has_gamma) return std::nullopt;
  return gamma;
}

hawkw_report to_c(const hawkw::MeasureReport& r) {
  return {r.c_l1, r.foc, r.gc, r.cf, r.tradeoff, r.cf_clamped ? 1 : 0};
}

hawkw_mode_params to_c(const hawkw::ModeParams& p) { return {p.temperature, p.omega, p.alpha, p.beta}; }

hawkw_deviation to_c(const hawkw::closedform::Deviation& d) {
  hawkw_deviation out{};
  std::snprintf(out.quantity, sizeof(out.quantity), "%s", d.quantity.c_str());
  std::snprintf(out.entry, sizeof(out.entry), "%s", d.entry.c_str());
  out.numeric = d.numeric;
  out.closed = d.closed;
  out.abs_dev = d.abs_dev;
  return out;
}

}  // namespace

extern "C" {

const char* hawkw_version(void) { return "1.0.0"; }

const char* hawkw_last_error(void) { return tl_error.c_str(); }

const char* hawkw_status_string(hawkw_status status) {
  switch (status) {
    case HAWKW_OK: return "ok";
    case HAWKW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HAWKW_ERR_OUT_OF_RANGE: return "out of range";
    case HAWKW_ERR_NULL_POINTER: return "null pointer";
    case HAWKW_ERR_NUMERIC: return "numerical failure";
    case HAWKW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

hawkw_status hawkw_scenario_parse(const char* name, hawkw_scenario* out) {
  HAWKW_REQUIRE(name);
  HAWKW_REQUIRE(out);
  const auto s = hawkw::parse_scenario(name);
  if (!s) return fail(HAWKW_ERR_INVALID_ARGUMENT, "unknown scenario (expected ABC, Abc, ABc or AbC)");
  switch (*s) {
    case hawkw::Scenario::ABC: *out = HAWKW_SCENARIO_ABC; break;
    case hawkw::Scenario::Abc: *out = HAWKW_SCENARIO_Abc; break;
    case hawkw::Scenario::ABc: *out = HAWKW_SCENARIO_ABc; break;
    case hawkw::Scenario::AbC: *out = HAWKW_SCENARIO_AbC; break;
  }
  tl_error.clear();
  return HAWKW_OK;
}

const char* hawkw_scenario_name(hawkw_scenario scenario) {
  switch (scenario) {
    case HAWKW_SCENARIO_ABC: return "ABC";
    case HAWKW_SCENARIO_Abc: return "Abc";
    case HAWKW_SCENARIO_ABc: return "ABc";
    case HAWKW_SCENARIO_AbC: return "AbC";
  }
  return "?";
}

hawkw_status hawkw_bogoliubov(double temperature, double omega, hawkw_mode_params* out) {
  HAWKW_REQUIRE(out);
  return guarded([&] { *out = to_c(hawkw::bogoliubov(temperature, omega)); });
}

hawkw_status hawkw_temperature_from_mass(double mass, double* out) {
  HAWKW_REQUIRE(out);
  return guarded([&] { *out = hawkw::hawking_temperature_from_mass(mass); });
}

hawkw_status hawkw_state_create(hawkw_scenario scenario, double temperature, double omega, hawkw_state** out) {
  HAWKW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto params = hawkw::bogoliubov(temperature, omega);
    *out = new hawkw_state{hawkw::reduce(to_scenario(scenario), params)};
  });
}

hawkw_status hawkw_state_create_closed_form(hawkw_scenario scenario, double temperature, double omega,
                                            int has_gamma, double gamma, hawkw_entry_table table,
                                            hawkw_state** out) {
  HAWKW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto params = hawkw::bogoliubov(temperature, omega);
    const auto s = to_scenario(scenario);
    *out = new hawkw_state{has_gamma ? hawkw::closedform::cf_evolved_matrix(s, params, gamma, to_table(table))
                                     : hawkw::closedform::cf_matrix(s, params)};
  });
}

hawkw_status hawkw_state_apply_damping(hawkw_state* state, double gamma) {
  HAWKW_REQUIRE(state);
  return guarded([&] {
    const auto ch = hawkw::ad_kraus(gamma);
    const std::vector<hawkw::KrausChannel> per_qubit(state->rho.subsystem_count(), ch);
    state->rho = hawkw::apply_product_channel(state->rho, per_qubit);
  });
}

hawkw_status hawkw_state_dim(const hawkw_state* state, size_t* out) {
  HAWKW_REQUIRE(state);
  HAWKW_REQUIRE(out);
  *out = state->rho.dim();
  return HAWKW_OK;
}

hawkw_status hawkw_state_entry(const hawkw_state* state, size_t row, size_t col, double* re, double* im) {
  HAWKW_REQUIRE(state);
  HAWKW_REQUIRE(re);
  HAWKW_REQUIRE(im);
  if (row >= state->rho.dim() || col >= state->rho.dim()) return fail(HAWKW_ERR_OUT_OF_RANGE, "entry out of range");
  *re = state->rho(row, col).real();
  *im = state->rho(row, col).imag();
  return HAWKW_OK;
}

hawkw_status hawkw_state_measures(const hawkw_state* state, hawkw_report* out) {
  HAWKW_REQUIRE(state);
  HAWKW_REQUIRE(out);
  return guarded([&] { *out = to_c(hawkw::full_report(state->rho)); });
}

hawkw_status hawkw_state_check(const hawkw_state* state, double* hermitian_error, double* trace_error,
                               double* min_eigenvalue, int* valid) {
  HAWKW_REQUIRE(state);
  return guarded([&] {
    const auto v = state->rho.validity();
    if (hermitian_error) *hermitian_error = v.hermitian_error;
    if (trace_error) *trace_error = v.trace_error;
    if (min_eigenvalue) *min_eigenvalue = v.min_eigenvalue;
    if (valid) *valid = v.ok() ? 1 : 0;
  });
}

void hawkw_state_destroy(hawkw_state* state) { delete state; }

hawkw_status hawkw_evaluate(const hawkw_point* point, hawkw_mode_params* params_out, hawkw_report* out) {
  HAWKW_REQUIRE(point);
  HAWKW_REQUIRE(out);
  return guarded([&] {
    const auto r = hawkw::evaluate(to_scenario(point->scenario), point->temperature, point->omega,
                                   gamma_of(point->has_gamma, point->gamma));
    *out = to_c(r.report);
    if (params_out) *params_out = to_c(r.params);
  });
}

hawkw_status hawkw_closed_form(const hawkw_point* point, hawkw_entry_table table, hawkw_report* out) {
  HAWKW_REQUIRE(point);
  HAWKW_REQUIRE(out);
  return guarded([&] {
    const auto params = hawkw::bogoliubov(point->temperature, point->omega);
    const auto p = hawkw::closedform::cf_point(to_scenario(point->scenario), params,
                                               gamma_of(point->has_gamma, point->gamma), to_table(table));
    *out = to_c(p.values);
  });
}

hawkw_status hawkw_verify(const hawkw_point* point, hawkw_entry_table table, hawkw_verify_result** out) {
  HAWKW_REQUIRE(point);
  HAWKW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto params = hawkw::bogoliubov(point->temperature, point->omega);
    *out = new hawkw_verify_result{hawkw::closedform::verify_point(
        to_scenario(point->scenario), params, gamma_of(point->has_gamma, point->gamma), to_table(table))};
  });
}

hawkw_status hawkw_verify_result_count(const hawkw_verify_result* result, size_t* out) {
  HAWKW_REQUIRE(result);
  HAWKW_REQUIRE(out);
  *out = result->report.items.size();
  return HAWKW_OK;
}

hawkw_status hawkw_verify_result_item(const hawkw_verify_result* result, size_t index, hawkw_deviation* out) {
  HAWKW_REQUIRE(result);
  HAWKW_REQUIRE(out);
  if (index >= result->report.items.size()) return fail(HAWKW_ERR_OUT_OF_RANGE, "item index out of range");
  *out = to_c(result->report.items[index]);
  return HAWKW_OK;
}

hawkw_status hawkw_verify_result_worst(const hawkw_verify_result* result, hawkw_deviation* out, int* clamp_agrees) {
  HAWKW_REQUIRE(result);
  return guarded([&] {
    if (out) *out = to_c(result->report.worst());
    if (clamp_agrees) *clamp_agrees = result->report.clamp_agrees ? 1 : 0;
  });
}

void hawkw_verify_result_destroy(hawkw_verify_result* result) { delete result; }

void hawkw_sweep_config_init(hawkw_sweep_config* config) {
  if (config == nullptr) return;
  const hawkw::SweepConfig d;
  config->scenario = HAWKW_SCENARIO_ABC;
  config->omega = d.omega;
  config->t_min = d.t_min;
  config->t_max = d.t_max;
  config->t_points = d.t_points;
  config->t_scale = HAWKW_GRID_LOG;
  config->has_gamma = 0;
  config->gamma = 0.0;
  config->include_limits = 0;
  config->workers = 0;
}

hawkw_status hawkw_temperature_grid(double t_min, double t_max, size_t points, hawkw_grid_scale scale, double* out) {
  HAWKW_REQUIRE(out);
  return guarded([&] {
    const auto grid = hawkw::temperature_grid(t_min, t_max, points, to_scale(scale));
    std::memcpy(out, grid.data(), grid.size() * sizeof(double));
  });
}

hawkw_status hawkw_sweep_run(const hawkw_sweep_config* config, hawkw_sweep_result** out) {
  HAWKW_REQUIRE(config);
  HAWKW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    hawkw::SweepConfig c;
    c.scenario = to_scenario(config->scenario);
    c.omega = config->omega;
    c.t_min = config->t_min;
    c.t_max = config->t_max;
    c.t_points = config->t_points;
    c.t_scale = to_scale(config->t_scale);
    c.gamma = gamma_of(config->has_gamma, config->gamma);
    c.include_limits = config->include_limits != 0;
    *out = new hawkw_sweep_result{hawkw::run_sweep(c, config->workers)};
  });
}

hawkw_status hawkw_sweep_result_size(const hawkw_sweep_result* result, size_t* out) {
  HAWKW_REQUIRE(result);
  HAWKW_REQUIRE(out);
  *out = result->rows.size();
  return HAWKW_OK;
}

hawkw_status hawkw_sweep_result_row(const hawkw_sweep_result* result, size_t index, hawkw_sweep_row* out) {
  HAWKW_REQUIRE(result);
  HAWKW_REQUIRE(out);
  if (index >= result->rows.size()) return fail(HAWKW_ERR_OUT_OF_RANGE, "row index out of range");
  const auto& r = result->rows[index];
  *out = {r.temperature, r.alpha, r.beta, to_c(r.report)};
  return HAWKW_OK;
}

void hawkw_sweep_result_destroy(hawkw_sweep_result* result) { delete result; }

}  // extern "C"
