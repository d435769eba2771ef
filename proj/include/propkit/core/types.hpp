#pragma once

#include <map>
#include <optional>
#include <string>

#include "propkit/units.hpp"

namespace propkit {

// Antoine coefficients for log10(p / base) = A - B / (T + C), T in kelvin.
//
// Parameter files declare the base unit of their A coefficient; the set
// converts to a pascal base on construction, so evaluation always yields
// pascal. The declared unit is kept for display only.
class AntoineParameterSet {
 public:
  // Throws Error{InvalidInput} for non-finite coefficients or t_min >= t_max.
  static AntoineParameterSet create(double A, double B, double C, Kelvin t_min,
                                    Kelvin t_max,
                                    PressureUnit declared_unit = PressureUnit::Pa);

  double A() const noexcept { return A_pa_; }  // pascal base
  double B() const noexcept { return B_; }     // K
  double C() const noexcept { return C_; }     // K
  Kelvin t_min() const noexcept { return t_min_; }
  Kelvin t_max() const noexcept { return t_max_; }
  PressureUnit declared_unit() const noexcept { return declared_unit_; }
  // A as given, in the declared unit.
  double A_declared() const noexcept { return A_declared_; }

  friend bool operator==(const AntoineParameterSet&,
                         const AntoineParameterSet&) = default;

 private:
  AntoineParameterSet() = default;
  double A_pa_ = 0.0;
  double A_declared_ = 0.0;
  double B_ = 0.0;
  double C_ = 0.0;
  Kelvin t_min_{};
  Kelvin t_max_{};
  PressureUnit declared_unit_ = PressureUnit::Pa;
};

enum class StateMode { isothermal, isobaric };

// The fixed state variable of a phase-equilibrium calculation.
class StateSpec {
 public:
  static StateSpec isothermal(Kelvin T);
  static StateSpec isobaric(Pascal p);

  StateMode mode() const noexcept { return mode_; }
  // Only meaningful for the matching mode.
  Kelvin temperature() const noexcept { return Kelvin{value_}; }
  Pascal pressure() const noexcept { return Pascal{value_}; }
  double value() const noexcept { return value_; }

 private:
  StateSpec(StateMode mode, double value) : mode_(mode), value_(value) {}
  StateMode mode_;
  double value_;
};

std::string_view to_string(StateMode mode) noexcept;

// UNIFAC subgroup id -> occurrence count (always > 0).
using GroupCounts = std::map<int, int>;

struct Component {
  std::string input_smiles;
  std::string canonical_smiles;
  std::optional<std::string> name;
  std::optional<GroupCounts> groups;
  std::optional<AntoineParameterSet> antoine;
};

}  // namespace propkit
