#include "propkit/fit/grid.hpp"

#include <cmath>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit::fit {

double FitGrid::mid_temperature() const noexcept {
  return temperatures.empty() ? 0.0 : temperatures[temperatures.size() / 2];
}

FitGrid build_fit_grid(activity::NrtlVariant variant, std::optional<Kelvin> T,
                       std::optional<TemperatureRange> range) {
  FitGrid grid;
  grid.variant = variant;
  if (variant == activity::NrtlVariant::three) {
    if (range)
      throw Error(Errc::RangeForbidden, "fit",
                  "the 3-parameter variant is isothermal; give a single temperature, not a range");
    if (!T) throw Error(Errc::InvalidInput, "fit", "the 3-parameter variant needs a temperature");
    if (!(T->value > 0.0 && std::isfinite(T->value)))
      throw Error(Errc::InvalidInput, "fit", "temperature must be positive");
    grid.compositions = activity::composition_grid_points(kIsothermalPoints);
    grid.temperatures = {T->value};
    return grid;
  }

  if (!range) {
    std::ostringstream os;
    os << "the " << activity::to_int(variant)
       << "-parameter variant needs a temperature range [T_lo, T_hi]";
    throw Error(Errc::RangeRequired, "fit", os.str());
  }
  if (T) throw Error(Errc::InvalidInput, "fit", "give either a temperature range or a temperature, not both");
  const double lo = range->lo.value, hi = range->hi.value;
  if (!(lo > 0.0 && std::isfinite(hi) && lo < hi))
    throw Error(Errc::InvalidInput, "fit", "temperature range must satisfy 0 < T_lo < T_hi");

  grid.compositions = activity::composition_grid_points(kPolythermalPoints);
  const auto last = static_cast<double>(kPolythermalTemperatures - 1);
  for (std::size_t j = 0; j < kPolythermalTemperatures; ++j)
    grid.temperatures.push_back(j + 1 == kPolythermalTemperatures
                                    ? hi
                                    : lo + (hi - lo) * static_cast<double>(j) / last);
  return grid;
}

std::vector<activity::ActivityCurve> compute_targets(const activity::ActivityModel& model,
                                                     const FitGrid& grid) {
  std::vector<activity::ActivityCurve> out;
  out.reserve(grid.J());
  for (double T : grid.temperatures)
    out.push_back(activity::activity_curve_on(model, Kelvin{T}, grid.compositions));
  return out;
}

}  // namespace propkit::fit
