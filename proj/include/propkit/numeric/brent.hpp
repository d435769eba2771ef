#pragma once

#include <functional>
#include <optional>

namespace propkit::numeric {

struct RootResult {
  double x = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Brent's bracketing root finder (GSL). Requires f(a) and f(b) of opposite
// sign or one of them zero; returns nullopt otherwise, or when f turns
// non-finite inside the bracket. Stops once the bracket is narrower than
// `x_tol` or f hits zero exactly. Exceptions thrown by f propagate.
std::optional<RootResult> brent_root(const std::function<double(double)>& f, double a, double b,
                                     double x_tol, int max_iter = 200);

}  // namespace propkit::numeric
