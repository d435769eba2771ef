#pragma once

#include <string_view>

namespace propkit {

// Temperatures cross module boundaries as Kelvin and pressures as Pascal.
// Construction is explicit so a bare double never silently becomes one.
struct Kelvin {
  double value = 0.0;
  constexpr explicit Kelvin(double v) noexcept : value(v) {}
  constexpr Kelvin() noexcept = default;
  friend constexpr bool operator==(Kelvin, Kelvin) = default;
};

struct Pascal {
  double value = 0.0;
  constexpr explicit Pascal(double v) noexcept : value(v) {}
  constexpr Pascal() noexcept = default;
  friend constexpr bool operator==(Pascal, Pascal) = default;
};

inline constexpr double kZeroCelsius = 273.15;

enum class PressureUnit { Pa, kPa, bar };

// Factor that converts a value in `unit` to pascal.
constexpr double to_pascal_factor(PressureUnit unit) noexcept {
  switch (unit) {
    case PressureUnit::Pa: return 1.0;
    case PressureUnit::kPa: return 1.0e3;
    case PressureUnit::bar: return 1.0e5;
  }
  return 1.0;
}

std::string_view to_string(PressureUnit unit) noexcept;
// Throws Error{InvalidInput} on an unrecognized token.
PressureUnit parse_pressure_unit(std::string_view token);

}  // namespace propkit
