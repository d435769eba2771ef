#pragma once

#include <string>
#include <vector>

#include "propkit/activity/curve.hpp"
#include "propkit/activity/nrtl.hpp"
#include "propkit/fit/grid.hpp"

namespace propkit::fit {

struct FitOptions {
  int n_starts = 8;
  double tolerance = 1e-10;
  int max_iterations = 500;  // per start
};

struct StartOutcome {
  activity::NrtlParameterSet initial;
  activity::NrtlParameterSet final_params;
  double initial_loss = 0.0;  // +inf if the start was infeasible
  double loss = 0.0;          // pure loss of final_params, +inf on failure
  int iterations = 0;
  bool converged = false;
};

struct FitResult {
  activity::NrtlParameterSet params;
  double loss = 0.0;  // evaluate_loss(params, targets, grid)
  int n_starts = 0;
  std::vector<double> start_losses;
  std::vector<StartOutcome> starts;
  bool converged = false;
  std::string equations_text;
};

// Multi-start Levenberg-Marquardt on the loss of evaluate_loss.
//
// Start 0 uses alpha = 0.3 and the infinite-dilution guesses
// tau21 = ln gamma1_inf, tau12 = ln gamma2_inf of the targets; the others come
// from a Halton sequence on tau in [-2, 2] and alpha in [0.1, 0.9]. The 6 and
// 10 parameter variants first fit the 3 constants at the middle grid
// temperature from each start, then release the temperature coefficients.
// Alpha is held inside (0, 2) by a barrier that only the optimizer sees.
//
// Throws AllStartsFailed when no start produces a finite loss.
FitResult fit_nrtl(const std::vector<activity::ActivityCurve>& targets, const FitGrid& grid,
                   const FitOptions& options = {});

// The deterministic 3-parameter starts (tau12, tau21, alpha) for a target set.
std::vector<activity::NrtlParameterSet> initial_guesses(
    const std::vector<activity::ActivityCurve>& targets, const FitGrid& grid, int n_starts);

// Radical-inverse Halton value of `index` in `base`.
double halton(unsigned index, unsigned base) noexcept;

}  // namespace propkit::fit
