#pragma once

#include <vector>

#include "propkit/activity/curve.hpp"
#include "propkit/activity/nrtl.hpp"
#include "propkit/fit/grid.hpp"

namespace propkit::fit {

// L = 1/(2NJ) sum_i sum_j sum_k (ln gamma_k^NRTL(x_i, T_j) - ln gamma_k^target)^2
//
// Squared deviations are accumulated with compensated (Neumaier) summation.
// Throws GridMismatch when the targets do not cover the grid exactly,
// AlphaOutOfRange when the parameters are infeasible at a grid temperature.
double evaluate_loss(const activity::NrtlParameterSet& params,
                     const std::vector<activity::ActivityCurve>& targets, const FitGrid& grid);

// Throws GridMismatch unless targets[j] sits at grid.temperatures[j] on
// exactly grid.compositions.
void check_targets(const std::vector<activity::ActivityCurve>& targets, const FitGrid& grid);

// Compensated sum, shared with the optimizer's cost.
class NeumaierSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace propkit::fit
