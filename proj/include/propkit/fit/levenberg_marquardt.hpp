#pragma once

#include <functional>

#include <Eigen/Dense>

namespace propkit::fit {

// Fills the residual vector at x; returns false when x is infeasible, in
// which case the step is rejected.
using ResidualFunction = std::function<bool(const Eigen::VectorXd& x, Eigen::VectorXd& r)>;

struct LmOptions {
  double tolerance = 1e-10;  // step and gradient-norm tolerance
  int max_iterations = 500;
  double initial_lambda = 1e-3;
};

struct LmResult {
  Eigen::VectorXd x;
  double cost = 0.0;  // 0.5 * |r|^2
  int iterations = 0;
  bool converged = false;
};

// Levenberg-Marquardt with a central-difference Jacobian. Each step solves
// the damped normal equations as an augmented least-squares problem by QR.
// An infeasible x0 comes back unchanged with infinite cost.
LmResult levenberg_marquardt(const ResidualFunction& residuals, Eigen::VectorXd x0,
                             const LmOptions& options = {});

}  // namespace propkit::fit
