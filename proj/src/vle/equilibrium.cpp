#include "propkit/vle/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "propkit/antoine/antoine.hpp"
#include "propkit/error.hpp"
#include "propkit/numeric/brent.hpp"

namespace propkit::vle {
namespace {

const char* kModule = "vle";

void check_fraction(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << what << " must lie in [0, 1], got " << v;
    throw Error(Errc::InvalidInput, kModule, os.str());
  }
}

void check_system(const BinarySystem& system) {
  if (!system.activity) throw Error(Errc::InvalidInput, kModule, "binary system has no activity model");
}

struct Gammas {
  double g1;
  double g2;
};

Gammas gammas(const BinarySystem& system, double x1, double T) {
  const auto lg = activity::ln_gamma(*system.activity, x1, Kelvin{T});
  return {std::exp(lg.ln_gamma1), std::exp(lg.ln_gamma2)};
}

struct Saturation {
  double p1;
  double p2;
};

Saturation saturation(const BinarySystem& system, double T) {
  return {antoine::vapor_pressure(system.antoine1, Kelvin{T}).value,
          antoine::vapor_pressure(system.antoine2, Kelvin{T}).value};
}

// Dew fixed point at fixed T; `x1` is the starting liquid composition and
// receives the converged value. Returns the dew pressure.
double dew_fixed_point(const BinarySystem& system, double T, double y1, double& x1,
                       Gammas& g, const SolverOptions& options) {
  const auto ps = saturation(system, T);
  const double y2 = 1.0 - y1;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    g = gammas(system, x1, T);
    const double p = 1.0 / (y1 / (g.g1 * ps.p1) + y2 / (g.g2 * ps.p2));
    const double x1_new = y1 * p / (g.g1 * ps.p1);
    if (!std::isfinite(x1_new)) break;
    if (std::abs(x1_new - x1) <= options.composition_tol) {
      x1 = std::clamp(x1_new, 0.0, 1.0);
      g = gammas(system, x1, T);
      return 1.0 / (y1 / (g.g1 * ps.p1) + y2 / (g.g2 * ps.p2));
    }
    x1 = std::clamp(x1 + options.damping * (x1_new - x1), 0.0, 1.0);
  }
  std::ostringstream os;
  os << "dew composition did not converge within " << options.max_iterations
     << " iterations at T = " << T << " K, y1 = " << y1;
  throw Error(Errc::NoConvergence, kModule, os.str());
}

double ideal_dew_x1(const Saturation& ps, double y1) {
  const double p = 1.0 / (y1 / ps.p1 + (1.0 - y1) / ps.p2);
  return std::clamp(y1 * p / ps.p1, 0.0, 1.0);
}

struct Bracket {
  double lo;
  double hi;
};

Bracket temperature_bracket(const BinarySystem& system, double p,
                            const SolverOptions& options) {
  const double t1 = antoine::boiling_temperature(system.antoine1, Pascal{p}).value;
  const double t2 = antoine::boiling_temperature(system.antoine2, Pascal{p}).value;
  double lo = std::min(t1, t2) - options.bracket_widening;
  const double hi = std::max(t1, t2) + options.bracket_widening;
  // Keep the bracket clear of the Antoine poles and of T <= 0.
  const double floor = std::max({0.0, -system.antoine1.C(), -system.antoine2.C()});
  if (lo <= floor) lo = floor + 0.5 * (std::min(t1, t2) - floor);
  return {lo, hi};
}

EquilibriumPoint pure_isobaric(const BinarySystem& system, double p, bool first) {
  const auto& params = first ? system.antoine1 : system.antoine2;
  const double T = antoine::boiling_temperature(params, Pascal{p}).value;
  const double x1 = first ? 1.0 : 0.0;
  const auto g = gammas(system, x1, T);
  return {T, p, x1, x1, g.g1, g.g2};
}

[[noreturn]] void bracket_failure(const char* what, double p, double z, const Bracket& b) {
  std::ostringstream os;
  os << what << ": no sign change in [" << b.lo << ", " << b.hi << "] K at p = " << p
     << " Pa, composition " << z;
  throw Error(Errc::BracketFailure, kModule, os.str());
}

[[noreturn]] void root_no_convergence(const char* what, double p, double z) {
  std::ostringstream os;
  os << what << ": temperature solve did not converge at p = " << p << " Pa, composition " << z;
  throw Error(Errc::NoConvergence, kModule, os.str());
}

}  // namespace

double raoult_residual(const BinarySystem& system, const EquilibriumPoint& pt) {
  const auto ps = saturation(system, pt.T_K);
  const double r1 = std::abs(ps.p1 * pt.x1 * pt.gamma1 - pt.p_Pa * pt.y1);
  const double r2 = std::abs(ps.p2 * (1.0 - pt.x1) * pt.gamma2 - pt.p_Pa * (1.0 - pt.y1));
  return std::max(r1, r2) / pt.p_Pa;
}

EquilibriumPoint bubble_isothermal(const BinarySystem& system, Kelvin T, double x1) {
  check_system(system);
  check_fraction(x1, "x1");
  const auto ps = saturation(system, T.value);
  const auto g = gammas(system, x1, T.value);
  const double x2 = 1.0 - x1;
  const double part1 = x1 * g.g1 * ps.p1;
  const double p = part1 + x2 * g.g2 * ps.p2;
  return {T.value, p, x1, part1 / p, g.g1, g.g2};
}

EquilibriumPoint dew_isothermal(const BinarySystem& system, Kelvin T, double y1,
                                const SolverOptions& options) {
  check_system(system);
  check_fraction(y1, "y1");
  const auto ps = saturation(system, T.value);
  if (y1 == 0.0 || y1 == 1.0) {
    const auto g = gammas(system, y1, T.value);
    return {T.value, y1 == 1.0 ? ps.p1 : ps.p2, y1, y1, g.g1, g.g2};
  }
  double x1 = ideal_dew_x1(ps, y1);
  Gammas g{1.0, 1.0};
  const double p = dew_fixed_point(system, T.value, y1, x1, g, options);
  return {T.value, p, x1, y1, g.g1, g.g2};
}

EquilibriumPoint bubble_isobaric(const BinarySystem& system, Pascal p, double x1,
                                 const SolverOptions& options) {
  check_system(system);
  check_fraction(x1, "x1");
  if (!(p.value > 0.0)) throw Error(Errc::InvalidInput, kModule, "pressure must be positive");
  if (x1 == 1.0) return pure_isobaric(system, p.value, true);
  if (x1 == 0.0) return pure_isobaric(system, p.value, false);

  const double x2 = 1.0 - x1;
  auto f = [&](double T) {
    const auto ps = saturation(system, T);
    const auto g = gammas(system, x1, T);
    return std::log((x1 * g.g1 * ps.p1 + x2 * g.g2 * ps.p2) / p.value);
  };
  const auto bracket = temperature_bracket(system, p.value, options);
  const auto root = numeric::brent_root(f, bracket.lo, bracket.hi, options.temperature_tol);
  if (!root) bracket_failure("bubble point", p.value, x1, bracket);
  if (!root->converged) root_no_convergence("bubble point", p.value, x1);

  const double T = root->x;
  const auto ps = saturation(system, T);
  const auto g = gammas(system, x1, T);
  const double part1 = x1 * g.g1 * ps.p1;
  const double y1 = part1 / (part1 + x2 * g.g2 * ps.p2);
  return {T, p.value, x1, y1, g.g1, g.g2};
}

EquilibriumPoint dew_isobaric(const BinarySystem& system, Pascal p, double y1,
                              const SolverOptions& options) {
  check_system(system);
  check_fraction(y1, "y1");
  if (!(p.value > 0.0)) throw Error(Errc::InvalidInput, kModule, "pressure must be positive");
  if (y1 == 1.0) return pure_isobaric(system, p.value, true);
  if (y1 == 0.0) return pure_isobaric(system, p.value, false);

  // The last converged liquid composition seeds the next inner solve.
  double x_seed = -1.0;
  auto inner = [&](double T, double& x1, Gammas& g) {
    x1 = x_seed >= 0.0 ? x_seed : ideal_dew_x1(saturation(system, T), y1);
    const double p_dew = dew_fixed_point(system, T, y1, x1, g, options);
    x_seed = x1;
    return p_dew;
  };
  auto f = [&](double T) {
    double x1;
    Gammas g{1.0, 1.0};
    return std::log(inner(T, x1, g) / p.value);
  };
  const auto bracket = temperature_bracket(system, p.value, options);
  const auto root = numeric::brent_root(f, bracket.lo, bracket.hi, options.temperature_tol);
  if (!root) bracket_failure("dew point", p.value, y1, bracket);
  if (!root->converged) root_no_convergence("dew point", p.value, y1);

  const double T = root->x;
  double x1;
  Gammas g{1.0, 1.0};
  inner(T, x1, g);
  return {T, p.value, x1, y1, g.g1, g.g2};
}

}  // namespace propkit::vle
