#include "propkit/fit/loss.hpp"

#include <cmath>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit::fit {

void NeumaierSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v))
    compensation_ += (sum_ - t) + v;
  else
    compensation_ += (v - t) + sum_;
  sum_ = t;
}

void check_targets(const std::vector<activity::ActivityCurve>& targets, const FitGrid& grid) {
  auto mismatch = [](const std::string& what) {
    throw Error(Errc::GridMismatch, "fit", what);
  };
  if (targets.size() != grid.J()) {
    std::ostringstream os;
    os << "expected " << grid.J() << " target curve(s), got " << targets.size();
    mismatch(os.str());
  }
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const auto& c = targets[j];
    if (c.T_K != grid.temperatures[j]) {
      std::ostringstream os;
      os << "target curve " << j << " is at " << c.T_K << " K, grid expects "
         << grid.temperatures[j] << " K";
      mismatch(os.str());
    }
    if (c.x1 != grid.compositions || c.ln_gamma1.size() != grid.N() ||
        c.ln_gamma2.size() != grid.N()) {
      std::ostringstream os;
      os << "target curve " << j << " does not cover the " << grid.N() << "-point composition grid";
      mismatch(os.str());
    }
  }
}

double evaluate_loss(const activity::NrtlParameterSet& params,
                     const std::vector<activity::ActivityCurve>& targets, const FitGrid& grid) {
  check_targets(targets, grid);
  NeumaierSum sum;
  for (std::size_t j = 0; j < grid.J(); ++j) {
    const auto state = activity::nrtl_tau_alpha(params, Kelvin{grid.temperatures[j]});
    const auto& target = targets[j];
    for (std::size_t i = 0; i < grid.N(); ++i) {
      const auto lg = activity::nrtl_ln_gamma(state, grid.compositions[i]);
      const double d1 = lg.ln_gamma1 - target.ln_gamma1[i];
      const double d2 = lg.ln_gamma2 - target.ln_gamma2[i];
      sum.add(d1 * d1);
      sum.add(d2 * d2);
    }
  }
  return sum.value() / static_cast<double>(2 * grid.N() * grid.J());
}

}  // namespace propkit::fit
