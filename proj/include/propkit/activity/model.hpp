#pragma once

#include <span>
#include <string>
#include <vector>

#include "propkit/units.hpp"

namespace propkit::activity {

struct LnGamma {
  double ln_gamma1 = 0.0;
  double ln_gamma2 = 0.0;
};

// A liquid-phase activity-coefficient model bound to one ordered binary pair.
// Implementations are immutable after construction and safe to share.
class ActivityModel {
 public:
  virtual ~ActivityModel() = default;

  virtual std::string name() const = 0;

  // x1 in [0, 1], T > 0.
  virtual LnGamma ln_gamma(double x1, Kelvin T) const = 0;

  // Evaluates a whole composition grid at one temperature. Adapters to remote
  // models override this to issue a single request.
  virtual std::vector<LnGamma> ln_gamma_grid(std::span<const double> x1,
                                             Kelvin T) const;
};

// Validated dispatch: checks the composition and temperature, then calls the
// model. Throws InvalidInput for x1 outside [0, 1] or T <= 0.
LnGamma ln_gamma(const ActivityModel& model, double x1, Kelvin T);

}  // namespace propkit::activity
