#include "propkit/antoine/antoine.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "propkit/error.hpp"

namespace propkit::antoine {

std::string_view to_string(Warning w) noexcept {
  switch (w) {
    case Warning::ExtrapolatedTemperature: return "ExtrapolatedTemperature";
    case Warning::LowPressureRegime: return "LowPressureRegime";
  }
  return "Unknown";
}

Pascal vapor_pressure(const AntoineParameterSet& params, Kelvin T) {
  if (!(T.value > 0.0)) {
    throw Error(Errc::InvalidInput, "antoine", "temperature must be > 0 K");
  }
  const double shifted = T.value + params.C();
  if (shifted == 0.0) {
    throw Error(Errc::SingularTemperature, "antoine",
                "T + C = 0 at T = " + std::to_string(T.value) + " K");
  }
  return Pascal{std::pow(10.0, params.A() - params.B() / shifted)};
}

Kelvin boiling_temperature(const AntoineParameterSet& params, Pascal p) {
  if (!(p.value > 0.0)) {
    throw Error(Errc::InvalidInput, "antoine", "pressure must be > 0 Pa");
  }
  const double denom = params.A() - std::log10(p.value);
  // A few ulps of A: log10 cannot resolve a smaller distance anyway.
  const double eps = 4.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, std::abs(params.A()));
  if (std::abs(denom) <= eps) {
    throw Error(Errc::SingularPressure, "antoine",
                "log10(p) equals A; boiling temperature undefined");
  }
  const double T = params.B() / denom - params.C();
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw Error(Errc::NonPhysical, "antoine",
                "inverted Antoine equation gives T = " + std::to_string(T) +
                    " K");
  }
  return Kelvin{T};
}

std::vector<Warning> range_check(const AntoineParameterSet& params, Kelvin T) {
  std::vector<Warning> warnings;
  if (T.value < params.t_min().value || T.value > params.t_max().value) {
    warnings.push_back(Warning::ExtrapolatedTemperature);
  }
  const double shifted = T.value + params.C();
  if (T.value > 0.0 && shifted != 0.0) {
    const double p = std::pow(10.0, params.A() - params.B() / shifted);
    if (p < kLowPressureThreshold) {
      warnings.push_back(Warning::LowPressureRegime);
    }
  }
  return warnings;
}

Evaluation evaluate(const AntoineParameterSet& params, Kelvin T) {
  return {vapor_pressure(params, T), range_check(params, T)};
}

double dlnp_dT(const AntoineParameterSet& params, Kelvin T) {
  const double shifted = T.value + params.C();
  return std::log(10.0) * params.B() / (shifted * shifted);
}

}  // namespace propkit::antoine
