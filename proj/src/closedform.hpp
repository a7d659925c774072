#pragma once

// Closed-form expressions for every state and measure of the dilated W
// state, coded directly from the analytic tables and kept free of the
// numeric pipeline (no partial traces, no Kraus sums, no shared measure
// helpers). `verify_point` runs both routes and reports the deviations.

#include <optional>
#include <string>
#include <vector>

#include "cxmat.hpp"
#include "measures.hpp"
#include "modes.hpp"
#include "states.hpp"

namespace hawkw::closedform {

// Which variant of the damped ABc table to use. The published table lists
//   c_22 = gamma (1-gamma) beta^2 (alpha^2 gamma + beta^2 gamma^2 + 1),
// and c_33 = c_22 + 1 - gamma, whose trace falls short of 1 whenever
// 0 < gamma < 1 and beta > 0. Summing the decay paths |011>, |101>, |111>
// -> |001> gives
//   c_22 = gamma (1-gamma) beta^2 (1 + alpha^2 + beta^2 gamma).
// All other entries are identical between the two variants.
enum class EntryTable { corrected, printed };

// A symbolic table entry, 1-indexed as printed ("a_46", "rho_Abc_16").
struct NamedEntry {
  std::string name;
  std::size_t row = 0;  // 0-indexed
  std::size_t col = 0;
  double value = 0.0;
};

struct ClosedFormPoint {
  Scenario scenario = Scenario::ABC;
  std::optional<double> gamma;
  double alpha = 1.0;
  double beta = 0.0;
  MeasureReport values;
};

// Undamped measures from the scenario formulas.
MeasureReport cf_measures(Scenario s, const ModeParams& params);
// Damped measures: C_l1 from the entry table, the rest from the damped
// single-qubit states. gamma = 0 reproduces the undamped values.
MeasureReport cf_measures(Scenario s, const ModeParams& params, double gamma,
                          EntryTable table = EntryTable::corrected);

ClosedFormPoint cf_point(Scenario s, const ModeParams& params, std::optional<double> gamma,
                         EntryTable table = EntryTable::corrected);

// Nonzero entries on and above the diagonal, already divided by 3.
std::vector<NamedEntry> cf_matrix_entries(Scenario s, const ModeParams& params);
DensityMatrix cf_matrix(Scenario s, const ModeParams& params);

std::vector<NamedEntry> cf_evolved_entries(Scenario s, const ModeParams& params, double gamma,
                                           EntryTable table = EntryTable::corrected);
DensityMatrix cf_evolved_matrix(Scenario s, const ModeParams& params, double gamma,
                                EntryTable table = EntryTable::corrected);

// Diagonal single-mode state of `label` in {A, B, b, C, c}; the label must
// belong to the scenario. Throws std::invalid_argument otherwise.
DensityMatrix cf_reduced_single(Scenario s, char label, const ModeParams& params,
                                std::optional<double> gamma = std::nullopt);

struct Deviation {
  std::string quantity;  // "matrix", "rho_B", "c_l1", ...
  std::string entry;     // offending symbolic entry for matrices, empty for scalars
  double numeric = 0.0;
  double closed = 0.0;
  double abs_dev = 0.0;
};

struct VerifyReport {
  Scenario scenario = Scenario::ABC;
  double temperature = 0.0;
  std::optional<double> gamma;
  std::vector<Deviation> items;
  bool clamp_agrees = true;

  const Deviation& worst() const;
  double max_deviation() const;
};

// Numeric pipeline vs closed forms at one parameter point.
VerifyReport verify_point(Scenario s, const ModeParams& params, std::optional<double> gamma,
                          EntryTable table = EntryTable::corrected);

}  // namespace hawkw::closedform
