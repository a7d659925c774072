#include "states.hpp"

#include <cmath>
#include <stdexcept>

namespace hawkw {

std::array<std::size_t, 3> kept_modes(Scenario s) {
  switch (s) {
    case Scenario::ABC: return {mode::A, mode::B, mode::C};
    case Scenario::Abc: return {mode::A, mode::b, mode::c};
    case Scenario::ABc: return {mode::A, mode::B, mode::c};
    case Scenario::AbC: return {mode::A, mode::b, mode::C};
  }
  throw std::invalid_argument("unknown scenario");
}

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::ABC: return "ABC";
    case Scenario::Abc: return "Abc";
    case Scenario::ABc: return "ABc";
    case Scenario::AbC: return "AbC";
  }
  return "?";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::ABC, Scenario::Abc, Scenario::ABc, Scenario::AbC})
    if (scenario_name(s) == name) return s;
  return std::nullopt;
}

PureState w_state() {
  const double amp = 1.0 / std::sqrt(3.0);
  std::vector<Complex> amps(8);
  amps[0b001] = amp;
  amps[0b010] = amp;
  amps[0b100] = amp;
  return PureState({"A", "B", "C"}, std::move(amps));
}

DensityMatrix reduce(Scenario s, const ModeParams& params) { return reduce(s, params, params); }

DensityMatrix reduce(Scenario s, const ModeParams& params_b, const ModeParams& params_c) {
  const PureState dilated = build_dilated_w(params_b, params_c);
  const auto keep = kept_modes(s);
  return partial_trace(dilated.density(), keep);
}

}  // namespace hawkw
