#include "propkit/activity/curve.hpp"

#include <cmath>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit::activity {

std::vector<LnGamma> ActivityModel::ln_gamma_grid(std::span<const double> x1,
                                                  Kelvin T) const {
  std::vector<LnGamma> out;
  out.reserve(x1.size());
  for (double x : x1) {
    try {
      out.push_back(ln_gamma(x, T));
    } catch (const Error& e) {
      std::ostringstream msg;
      msg.precision(17);
      msg << e.what() << " (at x1 = " << x << ")";
      throw Error(e.code(), e.module(), msg.str());
    }
  }
  return out;
}

LnGamma ln_gamma(const ActivityModel& model, double x1, Kelvin T) {
  if (!(x1 >= 0.0 && x1 <= 1.0)) {
    throw Error(Errc::InvalidInput, "activity", "x1 must lie in [0, 1]");
  }
  if (!(T.value > 0.0) || !std::isfinite(T.value)) {
    throw Error(Errc::InvalidInput, "activity", "temperature must be > 0 K");
  }
  return model.ln_gamma(x1, T);
}

std::vector<double> composition_grid_points(std::size_t points) {
  if (points < 2) {
    throw Error(Errc::InvalidInput, "activity",
                "a composition grid needs at least two points");
  }
  const auto n = static_cast<double>(points - 1);
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i) / n;
  }
  return grid;
}

std::vector<double> composition_grid(double dx) {
  if (!(dx > 0.0 && dx <= 1.0)) {
    throw Error(Errc::InvalidInput, "activity",
                "composition step must lie in (0, 1]");
  }
  const double n = std::round(1.0 / dx);
  if (std::abs(n * dx - 1.0) > 1e-9) {
    throw Error(Errc::InvalidInput, "activity",
                "composition step must divide 1 evenly");
  }
  return composition_grid_points(static_cast<std::size_t>(n) + 1);
}

ActivityCurve activity_curve_on(const ActivityModel& model, Kelvin T,
                                const std::vector<double>& grid) {
  if (!(T.value > 0.0) || !std::isfinite(T.value)) {
    throw Error(Errc::InvalidInput, "activity", "temperature must be > 0 K");
  }
  const auto values = model.ln_gamma_grid(grid, T);
  if (values.size() != grid.size()) {
    throw Error(Errc::ContractViolation, "activity",
                "model returned a curve of the wrong length");
  }
  ActivityCurve curve;
  curve.T_K = T.value;
  curve.x1 = grid;
  curve.model_name = model.name();
  curve.ln_gamma1.reserve(grid.size());
  curve.ln_gamma2.reserve(grid.size());
  for (const auto& v : values) {
    curve.ln_gamma1.push_back(v.ln_gamma1);
    curve.ln_gamma2.push_back(v.ln_gamma2);
  }
  return curve;
}

ActivityCurve activity_curve(const ActivityModel& model, Kelvin T, double dx) {
  return activity_curve_on(model, T, composition_grid(dx));
}

}  // namespace propkit::activity
