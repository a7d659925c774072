#pragma once

// Hawking-effect mode mixing for a single fermionic mode.
//
// A Kruskal mode seen by an observer hovering near the horizon splits into
// an exterior (out) and an interior (in) Schwarzschild mode:
//   |0>_K -> alpha |0>_out |0>_in + beta |1>_out |1>_in
//   |1>_K -> |1>_out |0>_in
// with alpha^2 = 1 / (1 + e^{-omega/T}) and beta^2 = 1 / (1 + e^{omega/T}).

#include <cstddef>
#include <string>

#include "cxmat.hpp"

namespace hawkw {

struct ModeParams {
  double temperature = 0.0;  // Hawking temperature, natural units; may be +inf
  double omega = 1.0;
  double alpha = 1.0;
  double beta = 0.0;
};

// T = 0 and T = +inf are exact limits. Throws std::invalid_argument for
// omega <= 0 or T < 0 (or NaN).
ModeParams bogoliubov(double temperature, double omega);

// Hawking temperature 1/(8 pi M) of a Schwarzschild black hole of mass M.
double hawking_temperature_from_mass(double mass);

// Inserts the partner mode immediately after `mode_index`. The new qubit is
// labelled `partner_label`, or the lower-cased parent label when empty.
PureState dilate_mode(const PureState& psi, std::size_t mode_index, const ModeParams& params,
                      const std::string& partner_label = {});

// W state of A, B, C with B and C dilated; register order A, B, b, C, c.
PureState build_dilated_w(const ModeParams& params_b, const ModeParams& params_c);

}  // namespace hawkw
