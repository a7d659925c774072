#include "modes.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "states.hpp"

namespace hawkw {

ModeParams bogoliubov(double temperature, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("frequency must be positive");
  if (!(temperature >= 0.0)) throw std::invalid_argument("temperature must be non-negative");

  ModeParams p;
  p.temperature = temperature;
  p.omega = omega;
  if (temperature == 0.0) {
    p.alpha = 1.0;
    p.beta = 0.0;
    return p;
  }
  if (std::isinf(temperature)) {
    p.alpha = std::numbers::sqrt2 / 2.0;
    p.beta = std::numbers::sqrt2 / 2.0;
    return p;
  }
  // Logistic form in e^{-x}, x = omega/T > 0, never overflows.
  const double e = std::exp(-omega / temperature);
  const double alpha2 = 1.0 / (1.0 + e);
  const double beta2 = e / (1.0 + e);
  p.alpha = std::sqrt(alpha2);
  p.beta = std::sqrt(beta2);
  return p;
}

double hawking_temperature_from_mass(double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  return 1.0 / (8.0 * std::numbers::pi * mass);
}

PureState dilate_mode(const PureState& psi, std::size_t mode_index, const ModeParams& params,
                      const std::string& partner_label) {
  const std::size_t n = psi.qubit_count();
  if (mode_index >= n) throw std::out_of_range("mode index out of range");

  std::vector<std::string> labels(psi.labels().begin(), psi.labels().end());
  std::string partner = partner_label;
  if (partner.empty()) {
    partner = labels[mode_index];
    for (auto& ch : partner) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(mode_index) + 1, partner);

  // Bits below the dilated qubit keep their place; the new qubit sits just
  // below it, so higher bits shift up by one.
  const std::size_t low_bits = n - 1 - mode_index;
  const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
  std::vector<Complex> out(std::size_t{1} << (n + 1));
  const auto amps = psi.amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const Complex a = amps[idx];
    if (a == Complex{}) continue;
    const std::size_t low = idx & low_mask;
    const std::size_t high = idx >> low_bits;  // includes the dilated qubit as bit 0
    const auto compose = [&](std::size_t mode_bit, std::size_t partner_bit) {
      return ((((high & ~std::size_t{1}) | mode_bit) << 1 | partner_bit) << low_bits) | low;
    };
    if (high & 1) {
      out[compose(1, 0)] += a;
    } else {
      out[compose(0, 0)] += params.alpha * a;
      out[compose(1, 1)] += params.beta * a;
    }
  }
  return PureState(std::move(labels), std::move(out));
}

PureState build_dilated_w(const ModeParams& params_b, const ModeParams& params_c) {
  const PureState w = w_state();
  const PureState with_c = dilate_mode(w, 2, params_c);
  return dilate_mode(with_c, 1, params_b);
}

}  // namespace hawkw
