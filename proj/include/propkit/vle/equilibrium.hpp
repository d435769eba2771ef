#pragma once

#include <memory>

#include "propkit/activity/model.hpp"
#include "propkit/core/types.hpp"
#include "propkit/units.hpp"

namespace propkit::vle {

// One vapor-liquid equilibrium state of a binary mixture under the extended
// Raoult's law  p_i^s(T) x_i gamma_i(T, x) = p y_i  (ideal vapor, no Poynting
// correction).
struct EquilibriumPoint {
  double T_K = 0.0;
  double p_Pa = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;
};

// Everything a phase-equilibrium calculation needs for an ordered pair.
struct BinarySystem {
  AntoineParameterSet antoine1;
  AntoineParameterSet antoine2;
  std::shared_ptr<const activity::ActivityModel> activity;
};

struct SolverOptions {
  double damping = 0.5;           // dew successive substitution
  int max_iterations = 200;       // dew successive substitution
  double composition_tol = 1e-10; // max |dx| of one substitution step
  double temperature_tol = 1e-8;  // K, isobaric root solves
  double bracket_widening = 20.0; // K beyond the pure boiling points
};

// Largest |p_i^s x_i gamma_i - p y_i| / p over both components.
double raoult_residual(const BinarySystem& system, const EquilibriumPoint& point);

EquilibriumPoint bubble_isothermal(const BinarySystem& system, Kelvin T, double x1);

// Damped successive substitution on the liquid composition. Throws
// NoConvergence when the iteration cap is hit.
EquilibriumPoint dew_isothermal(const BinarySystem& system, Kelvin T, double y1,
                                const SolverOptions& options = {});

// Brent solve on T inside the pure boiling temperatures widened by
// options.bracket_widening. Throws BracketFailure or NoConvergence.
EquilibriumPoint bubble_isobaric(const BinarySystem& system, Pascal p, double x1,
                                 const SolverOptions& options = {});

EquilibriumPoint dew_isobaric(const BinarySystem& system, Pascal p, double y1,
                              const SolverOptions& options = {});

}  // namespace propkit::vle
