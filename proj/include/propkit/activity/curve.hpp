#pragma once

#include <string>
#include <vector>

#include "propkit/activity/model.hpp"
#include "propkit/units.hpp"

namespace propkit::activity {

inline constexpr double kDefaultCompositionStep = 0.01;

// ln gamma of both components over a mole-fraction grid at one temperature.
// This is the interchange format between prediction, fitting and export.
struct ActivityCurve {
  double T_K = 0.0;
  std::vector<double> x1;
  std::vector<double> ln_gamma1;
  std::vector<double> ln_gamma2;
  std::string model_name;

  std::size_t size() const noexcept { return x1.size(); }
};

// 0, dx, 2 dx, ..., 1 with exact endpoints (x_i = i / n).
// Throws InvalidInput unless 1 / dx is an integer >= 1.
std::vector<double> composition_grid(double dx);

// Evenly spaced grid with `points` entries including both endpoints.
std::vector<double> composition_grid_points(std::size_t points);

// Evaluates `model` over composition_grid(dx). Model errors are rethrown with
// the failing composition in the message.
ActivityCurve activity_curve(const ActivityModel& model, Kelvin T,
                             double dx = kDefaultCompositionStep);

ActivityCurve activity_curve_on(const ActivityModel& model, Kelvin T,
                                const std::vector<double>& grid);

}  // namespace propkit::activity
