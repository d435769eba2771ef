#include "propkit/fit/levenberg_marquardt.hpp"

#include <cmath>
#include <limits>

namespace propkit::fit {
namespace {

constexpr double kMaxLambda = 1e16;

double half_norm2(const Eigen::VectorXd& r) { return 0.5 * r.squaredNorm(); }

bool jacobian(const ResidualFunction& f, const Eigen::VectorXd& x, Eigen::Index m,
              Eigen::MatrixXd& J) {
  const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  J.resize(m, x.size());
  Eigen::VectorXd rp(m), rm(m);
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double h = h0 * std::max(1.0, std::abs(x[k]));
    Eigen::VectorXd xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    const bool ok_p = f(xp, rp);
    const bool ok_m = f(xm, rm);
    if (ok_p && ok_m) {
      J.col(k) = (rp - rm) / (xp[k] - xm[k]);
    } else {
      // One-sided difference next to the feasibility boundary.
      Eigen::VectorXd r0(m);
      if (!f(x, r0)) return false;
      if (ok_p) J.col(k) = (rp - r0) / (xp[k] - x[k]);
      else if (ok_m) J.col(k) = (r0 - rm) / (x[k] - xm[k]);
      else return false;
    }
  }
  return true;
}

}  // namespace

LmResult levenberg_marquardt(const ResidualFunction& f, Eigen::VectorXd x,
                             const LmOptions& options) {
  LmResult out;
  Eigen::VectorXd r;
  if (!f(x, r) || !r.allFinite()) {
    out.x = x;
    out.cost = std::numeric_limits<double>::infinity();
    return out;
  }
  const Eigen::Index m = r.size();
  const Eigen::Index n = x.size();
  double cost = half_norm2(r);
  double lambda = options.initial_lambda;
  Eigen::MatrixXd J;

  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    if (cost == 0.0) {
      out.converged = true;
      break;
    }
    if (!jacobian(f, x, m, J)) break;
    const Eigen::VectorXd g = J.transpose() * r;
    if (g.lpNorm<Eigen::Infinity>() <= options.tolerance) {
      out.converged = true;
      break;
    }
    // Marquardt scaling by the column norms of J.
    Eigen::VectorXd d = J.colwise().norm().transpose();
    for (Eigen::Index k = 0; k < n; ++k)
      if (d[k] == 0.0) d[k] = 1.0;

    bool accepted = false;
    bool small_step = false;
    while (lambda <= kMaxLambda) {
      Eigen::MatrixXd A(m + n, n);
      A.topRows(m) = J;
      A.bottomRows(n) = (std::sqrt(lambda) * d).asDiagonal();
      Eigen::VectorXd b = Eigen::VectorXd::Zero(m + n);
      b.head(m) = -r;
      const Eigen::VectorXd step = A.colPivHouseholderQr().solve(b);
      if (step.norm() <= options.tolerance * (x.norm() + options.tolerance)) {
        small_step = true;
        break;
      }
      const Eigen::VectorXd x_new = x + step;
      Eigen::VectorXd r_new;
      if (f(x_new, r_new) && r_new.allFinite()) {
        const double cost_new = half_norm2(r_new);
        if (cost_new < cost) {
          x = x_new;
          r = std::move(r_new);
          cost = cost_new;
          lambda = std::max(lambda / 10.0, 1e-15);
          accepted = true;
          break;
        }
      }
      lambda *= 10.0;
    }
    if (small_step) {
      out.converged = true;
      break;
    }
    if (!accepted) {
      // No descent at any damping: x is stationary to working precision.
      out.converged = true;
      break;
    }
  }
  out.x = x;
  out.cost = cost;
  out.iterations = iter;
  return out;
}

}  // namespace propkit::fit
