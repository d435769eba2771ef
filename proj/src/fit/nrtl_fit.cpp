#include "propkit/fit/nrtl_fit.hpp"

#include <cmath>
#include <limits>

#include "propkit/error.hpp"
#include "propkit/fit/levenberg_marquardt.hpp"
#include "propkit/fit/loss.hpp"

namespace propkit::fit {
namespace {

using activity::NrtlParameterSet;
using activity::NrtlVariant;

constexpr double kInf = std::numeric_limits<double>::infinity();
// Width of the alpha band next to 0 and 2 where the barrier is active.
constexpr double kBarrierBand = 0.01;

// Optimizer coordinates, centred on the middle grid temperature Tm:
//   tau   = A + B (Tm/T - 1) + E ln(T/Tm) + F (T/Tm - 1)
//   alpha = Cc + D (T - Tm) / Tm
// Layout: 3 -> [A12 A21 Cc], 6 -> [A12 A21 B12 B21 Cc D],
//         10 -> [A12 A21 B12 B21 E12 E21 F12 F21 Cc D].
struct Coordinates {
  NrtlVariant variant;
  double Tm;

  struct Terms {
    double A12 = 0, A21 = 0, B12 = 0, B21 = 0, E12 = 0, E21 = 0, F12 = 0, F21 = 0, Cc = 0, D = 0;
  };

  Terms unpack(const Eigen::VectorXd& v) const {
    Terms t;
    t.A12 = v[0];
    t.A21 = v[1];
    if (variant == NrtlVariant::three) {
      t.Cc = v[2];
      return t;
    }
    t.B12 = v[2];
    t.B21 = v[3];
    if (variant == NrtlVariant::ten) {
      t.E12 = v[4];
      t.E21 = v[5];
      t.F12 = v[6];
      t.F21 = v[7];
    }
    t.Cc = v[v.size() - 2];
    t.D = v[v.size() - 1];
    return t;
  }

  Eigen::VectorXd pack(const Terms& t) const {
    Eigen::VectorXd v(activity::to_int(variant));
    v[0] = t.A12;
    v[1] = t.A21;
    if (variant == NrtlVariant::three) {
      v[2] = t.Cc;
      return v;
    }
    v[2] = t.B12;
    v[3] = t.B21;
    if (variant == NrtlVariant::ten) {
      v[4] = t.E12;
      v[5] = t.E21;
      v[6] = t.F12;
      v[7] = t.F21;
    }
    v[v.size() - 2] = t.Cc;
    v[v.size() - 1] = t.D;
    return v;
  }

  activity::NrtlState state(const Terms& t, double T) const {
    const double u = T / Tm;
    const double inv = Tm / T - 1.0;
    const double lnu = std::log(u);
    activity::NrtlState s;
    s.tau12 = t.A12 + t.B12 * inv + t.E12 * lnu + t.F12 * (u - 1.0);
    s.tau21 = t.A21 + t.B21 * inv + t.E21 * lnu + t.F21 * (u - 1.0);
    s.alpha = t.Cc + t.D * (u - 1.0);
    s.G12 = std::exp(-s.alpha * s.tau12);
    s.G21 = std::exp(-s.alpha * s.tau21);
    return s;
  }

  NrtlParameterSet to_params(const Eigen::VectorXd& v) const {
    const Terms t = unpack(v);
    NrtlParameterSet p;
    p.variant = variant;
    p.a12 = t.A12 - t.B12 - t.E12 * std::log(Tm) - t.F12;
    p.a21 = t.A21 - t.B21 - t.E21 * std::log(Tm) - t.F21;
    p.b12 = t.B12 * Tm;
    p.b21 = t.B21 * Tm;
    p.e12 = t.E12;
    p.e21 = t.E21;
    p.f12 = t.F12 / Tm;
    p.f21 = t.F21 / Tm;
    p.d12 = t.D / Tm;
    p.c12 = t.Cc - p.d12 * (Tm - kZeroCelsius);
    if (variant == NrtlVariant::three) {
      p.a12 = t.A12;
      p.a21 = t.A21;
      p.c12 = t.Cc;
    }
    return p;
  }
};

double barrier(double alpha) {
  if (alpha < kBarrierBand) return kBarrierBand / alpha - 1.0;
  if (alpha > 2.0 - kBarrierBand) return kBarrierBand / (2.0 - alpha) - 1.0;
  return 0.0;
}

// Residuals d / sqrt(NJ), so that 0.5 |r|^2 equals the loss, followed by one
// barrier term per grid temperature.
ResidualFunction make_residuals(const Coordinates& coords,
                                const std::vector<activity::ActivityCurve>& targets,
                                const FitGrid& grid) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(grid.N() * grid.J()));
  return [&coords, &targets, &grid, scale](const Eigen::VectorXd& v, Eigen::VectorXd& r) {
    const auto t = coords.unpack(v);
    r.resize(static_cast<Eigen::Index>(2 * grid.N() * grid.J() + grid.J()));
    Eigen::Index k = 0;
    for (std::size_t j = 0; j < grid.J(); ++j) {
      const auto s = coords.state(t, grid.temperatures[j]);
      if (!(s.alpha > 0.0 && s.alpha < 2.0)) return false;
      for (std::size_t i = 0; i < grid.N(); ++i) {
        const auto lg = activity::nrtl_ln_gamma(s, grid.compositions[i]);
        r[k++] = scale * (lg.ln_gamma1 - targets[j].ln_gamma1[i]);
        r[k++] = scale * (lg.ln_gamma2 - targets[j].ln_gamma2[i]);
      }
    }
    for (std::size_t j = 0; j < grid.J(); ++j)
      r[k++] = barrier(coords.state(t, grid.temperatures[j]).alpha);
    return true;
  };
}

double cost_at(const ResidualFunction& f, const Eigen::VectorXd& v) {
  Eigen::VectorXd r;
  if (!f(v, r) || !r.allFinite()) return kInf;
  return 0.5 * r.squaredNorm();
}

double safe_loss(const NrtlParameterSet& p, const std::vector<activity::ActivityCurve>& targets,
                 const FitGrid& grid) {
  try {
    const double L = evaluate_loss(p, targets, grid);
    return std::isfinite(L) ? L : kInf;
  } catch (const Error& e) {
    if (e.code() == Errc::AlphaOutOfRange) return kInf;
    throw;
  }
}

}  // namespace

double halton(unsigned index, unsigned base) noexcept {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

std::vector<NrtlParameterSet> initial_guesses(const std::vector<activity::ActivityCurve>& targets,
                                              const FitGrid& grid, int n_starts) {
  check_targets(targets, grid);
  std::vector<NrtlParameterSet> out;
  if (n_starts <= 0) return out;
  const auto& mid = targets[grid.J() / 2];
  // ln gamma1 at x1 = 0 and ln gamma2 at x1 = 1 are the infinite-dilution values.
  out.push_back(NrtlParameterSet::from_tau_alpha(mid.ln_gamma2.back(), mid.ln_gamma1.front(), 0.3));
  for (int s = 1; s < n_starts; ++s) {
    const auto i = static_cast<unsigned>(s);
    out.push_back(NrtlParameterSet::from_tau_alpha(-2.0 + 4.0 * halton(i, 2),
                                                   -2.0 + 4.0 * halton(i, 3),
                                                   0.1 + 0.8 * halton(i, 5)));
  }
  return out;
}

FitResult fit_nrtl(const std::vector<activity::ActivityCurve>& targets, const FitGrid& grid,
                   const FitOptions& options) {
  check_targets(targets, grid);
  if (options.n_starts < 1) throw Error(Errc::InvalidInput, "fit", "at least one start is required");
  const auto guesses = initial_guesses(targets, grid, options.n_starts);
  const double Tm = grid.mid_temperature();

  LmOptions lm;
  lm.tolerance = options.tolerance;
  lm.max_iterations = options.max_iterations;

  const Coordinates full{grid.variant, Tm};
  const auto f_full = make_residuals(full, targets, grid);

  // Isothermal sub-problem at Tm for the warm start of the 6/10 variants.
  const Coordinates iso{NrtlVariant::three, Tm};
  FitGrid mid_grid{grid.compositions, {Tm}, NrtlVariant::three};
  const std::vector<activity::ActivityCurve> mid_targets{targets[grid.J() / 2]};
  const auto f_mid = make_residuals(iso, mid_targets, mid_grid);

  FitResult result;
  result.n_starts = options.n_starts;
  for (const auto& guess : guesses) {
    StartOutcome so;
    so.initial = guess;
    so.initial.variant = grid.variant;
    so.initial_loss = safe_loss(so.initial, targets, grid);

    Coordinates::Terms t;
    t.A12 = guess.a12;
    t.A21 = guess.a21;
    t.Cc = guess.c12;
    Eigen::VectorXd x0 = full.pack(t);
    if (grid.variant != NrtlVariant::three) {
      const auto warm = levenberg_marquardt(f_mid, iso.pack(t), lm);
      if (std::isfinite(warm.cost)) {
        const auto wt = iso.unpack(warm.x);
        Coordinates::Terms embedded;
        embedded.A12 = wt.A12;
        embedded.A21 = wt.A21;
        embedded.Cc = wt.Cc;
        const Eigen::VectorXd x_warm = full.pack(embedded);
        if (cost_at(f_full, x_warm) <= cost_at(f_full, x0)) x0 = x_warm;
      }
    }

    const auto run = levenberg_marquardt(f_full, x0, lm);
    so.iterations = run.iterations;
    so.converged = run.converged;
    if (std::isfinite(run.cost)) {
      so.final_params = full.to_params(run.x);
      so.loss = safe_loss(so.final_params, targets, grid);
    } else {
      so.final_params = so.initial;
      so.loss = kInf;
    }
    result.start_losses.push_back(so.loss);
    result.starts.push_back(so);
  }

  std::size_t best = result.starts.size();
  for (std::size_t s = 0; s < result.starts.size(); ++s)
    if (std::isfinite(result.starts[s].loss) &&
        (best == result.starts.size() || result.starts[s].loss < result.starts[best].loss))
      best = s;
  if (best == result.starts.size())
    throw Error(Errc::AllStartsFailed, "fit", "no start produced a finite loss");

  result.params = result.starts[best].final_params;
  result.loss = result.starts[best].loss;
  result.converged = result.starts[best].converged;
  result.equations_text = activity::nrtl_equations(result.params);
  return result;
}

}  // namespace propkit::fit
