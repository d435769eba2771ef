#include "propkit/core/types.hpp"

#include <cmath>
#include <string>

#include "propkit/error.hpp"

namespace propkit {

namespace {

// log10 of the pascal conversion factor; integral, so the A shift is exact.
double log10_factor(PressureUnit unit) {
  switch (unit) {
    case PressureUnit::Pa: return 0.0;
    case PressureUnit::kPa: return 3.0;
    case PressureUnit::bar: return 5.0;
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(PressureUnit unit) noexcept {
  switch (unit) {
    case PressureUnit::Pa: return "Pa";
    case PressureUnit::kPa: return "kPa";
    case PressureUnit::bar: return "bar";
  }
  return "Pa";
}

PressureUnit parse_pressure_unit(std::string_view token) {
  if (token == "Pa") return PressureUnit::Pa;
  if (token == "kPa") return PressureUnit::kPa;
  if (token == "bar") return PressureUnit::bar;
  throw Error(Errc::InvalidInput, "core",
              "unknown pressure unit '" + std::string(token) +
                  "' (expected Pa, kPa or bar)");
}

AntoineParameterSet AntoineParameterSet::create(double A, double B, double C,
                                                Kelvin t_min, Kelvin t_max,
                                                PressureUnit declared_unit) {
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C) ||
      !std::isfinite(t_min.value) || !std::isfinite(t_max.value)) {
    throw Error(Errc::InvalidInput, "core",
                "Antoine parameters must be finite");
  }
  if (!(t_min.value < t_max.value)) {
    throw Error(Errc::InvalidInput, "core",
                "Antoine validity range requires t_min < t_max");
  }
  AntoineParameterSet set;
  set.A_pa_ = A + log10_factor(declared_unit);
  set.A_declared_ = A;
  set.B_ = B;
  set.C_ = C;
  set.t_min_ = t_min;
  set.t_max_ = t_max;
  set.declared_unit_ = declared_unit;
  return set;
}

StateSpec StateSpec::isothermal(Kelvin T) {
  if (!(T.value > 0.0) || !std::isfinite(T.value)) {
    throw Error(Errc::InvalidInput, "core", "temperature must be > 0 K");
  }
  return StateSpec(StateMode::isothermal, T.value);
}

StateSpec StateSpec::isobaric(Pascal p) {
  if (!(p.value > 0.0) || !std::isfinite(p.value)) {
    throw Error(Errc::InvalidInput, "core", "pressure must be > 0 Pa");
  }
  return StateSpec(StateMode::isobaric, p.value);
}

std::string_view to_string(StateMode mode) noexcept {
  return mode == StateMode::isothermal ? "isothermal" : "isobaric";
}

}  // namespace propkit
