#pragma once

#include <optional>
#include <vector>

#include "propkit/activity/curve.hpp"
#include "propkit/activity/model.hpp"
#include "propkit/activity/nrtl.hpp"
#include "propkit/units.hpp"

namespace propkit::fit {

struct TemperatureRange {
  Kelvin lo;
  Kelvin hi;
};

// Compositions x_i and temperatures T_j on which a fit is evaluated.
//   3-parameter variant: N = 101 (dx = 0.01), J = 1
//   6/10-parameter variants: N = 21, J = 5 equally spaced over [T_lo, T_hi]
struct FitGrid {
  std::vector<double> compositions;
  std::vector<double> temperatures;
  activity::NrtlVariant variant = activity::NrtlVariant::three;

  std::size_t N() const noexcept { return compositions.size(); }
  std::size_t J() const noexcept { return temperatures.size(); }
  double mid_temperature() const noexcept;
};

inline constexpr std::size_t kIsothermalPoints = 101;
inline constexpr std::size_t kPolythermalPoints = 21;
inline constexpr std::size_t kPolythermalTemperatures = 5;

// The 3-parameter variant takes a single temperature and rejects a range
// (RangeForbidden); the others need a range (RangeRequired).
FitGrid build_fit_grid(activity::NrtlVariant variant, std::optional<Kelvin> T,
                       std::optional<TemperatureRange> range);

// One activity curve per grid temperature, evaluated by any model.
std::vector<activity::ActivityCurve> compute_targets(const activity::ActivityModel& model,
                                                     const FitGrid& grid);

}  // namespace propkit::fit
