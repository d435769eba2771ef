#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "propkit/activity/curve.hpp"
#include "propkit/fit/grid.hpp"
#include "propkit/fit/nrtl_fit.hpp"
#include "propkit/vle/diagram.hpp"

namespace propkit::io {

// All exports are UTF-8, '.' decimal separator, '\n' line ends, and every
// number in shortest round-trip form.

// T_K,x1,ln_gamma1,ln_gamma2 with one row per grid point.
std::string activity_csv(const activity::ActivityCurve& curve);

// x1,y1,T_K,p_Pa,gamma1,gamma2,line with the bubble rows first, then dew.
std::string vle_csv(const vle::VleDiagram& diagram);

// Three blocks separated by a blank line:
//   parameter,value        variant tag, the ten NRTL slots, loss
//   start,loss             one row per start
//   T_K,x1,ln_gamma1_nrtl,ln_gamma2_nrtl,ln_gamma1_target,ln_gamma2_target
std::string fit_csv(const fit::FitResult& result,
                    const std::vector<activity::ActivityCurve>& targets, const fit::FitGrid& grid);

struct ParsedFit {
  activity::NrtlParameterSet params;
  double loss = 0.0;
  std::vector<double> start_losses;
  fit::FitGrid grid;
  std::vector<activity::ActivityCurve> targets;
};

// Reads fit_csv output back. Throws MalformedTable.
ParsedFit parse_fit_csv(std::string_view text);

}  // namespace propkit::io
