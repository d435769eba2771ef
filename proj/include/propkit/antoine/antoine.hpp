#pragma once

#include <string_view>
#include <vector>

#include "propkit/core/types.hpp"
#include "propkit/units.hpp"

namespace propkit::antoine {

enum class Warning {
  ExtrapolatedTemperature,  // outside [t_min, t_max]
  LowPressureRegime,        // below 1 kPa, where correlations are least reliable
};

std::string_view to_string(Warning w) noexcept;

inline constexpr double kLowPressureThreshold = 1000.0;  // Pa

// p = 10^(A - B / (T + C)) in pascal.
// Throws SingularTemperature when T + C == 0, InvalidInput when T <= 0.
Pascal vapor_pressure(const AntoineParameterSet& params, Kelvin T);

// Inverse of vapor_pressure: T = B / (A - log10 p) - C.
// Throws SingularPressure when A == log10 p, NonPhysical when T <= 0.
Kelvin boiling_temperature(const AntoineParameterSet& params, Pascal p);

std::vector<Warning> range_check(const AntoineParameterSet& params, Kelvin T);

struct Evaluation {
  Pascal p;
  std::vector<Warning> warnings;
};

// vapor_pressure plus the range_check warnings at the same temperature.
Evaluation evaluate(const AntoineParameterSet& params, Kelvin T);

// d ln(p) / dT, used by solvers for step estimates.
double dlnp_dT(const AntoineParameterSet& params, Kelvin T);

}  // namespace propkit::antoine
