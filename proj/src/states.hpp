#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "cxmat.hpp"
#include "modes.hpp"

namespace hawkw {

// Register positions in the dilated five-qubit state.
namespace mode {
inline constexpr std::size_t A = 0;
inline constexpr std::size_t B = 1;
inline constexpr std::size_t b = 2;
inline constexpr std::size_t C = 3;
inline constexpr std::size_t c = 4;
}  // namespace mode

// Which three of the five modes are kept.
//   ABC: all exterior modes.
//   Abc: Alice plus both interior modes.
//   ABc: Alice, Bob and Charlie's interior partner.
//   AbC: B<->C mirror of ABc, kept in register order (A, b, C). It carries
//        the same measures as ABc and has no tabulated closed form.
enum class Scenario { ABC, Abc, ABc, AbC };

inline constexpr std::array<Scenario, 3> kTabulatedScenarios{Scenario::ABC, Scenario::Abc, Scenario::ABc};

std::array<std::size_t, 3> kept_modes(Scenario s);
std::string_view scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

// (|001> + |010> + |100>) / sqrt(3) on labels A, B, C.
PureState w_state();

// Traces the two complementary modes out of the dilated W state.
DensityMatrix reduce(Scenario s, const ModeParams& params);
DensityMatrix reduce(Scenario s, const ModeParams& params_b, const ModeParams& params_c);

}  // namespace hawkw
