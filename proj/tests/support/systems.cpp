#include "systems.hpp"

#include <cmath>

#include "propkit/api/config.hpp"

namespace testsys {

using namespace propkit;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

AntoineParameterSet antoine_through(double p_ref, double T_ref, double B, double C) {
  const double A = std::log10(p_ref) + B / (T_ref + C);
  return AntoineParameterSet::create(A, B, C, Kelvin{280.0}, Kelvin{420.0}, PressureUnit::Pa);
}

AntoineParameterSet random_antoine(Rng& rng) {
  const double p = std::exp(uniform(rng, std::log(2e4), std::log(2e5)));
  const double B = uniform(rng, 1200.0, 1800.0);
  const double C = uniform(rng, -70.0, -40.0);
  return antoine_through(p, 350.0, B, C);
}

std::shared_ptr<const activity::NrtlModel> nrtl(double tau12, double tau21, double alpha) {
  return std::make_shared<activity::NrtlModel>(
      activity::NrtlParameterSet::from_tau_alpha(tau12, tau21, alpha));
}

activity::NrtlParameterSet random_mild_nrtl(Rng& rng) {
  const double t12 = uniform(rng, -0.8, 1.0);
  const double t21 = uniform(rng, -0.8, 1.0);
  const double a = uniform(rng, 0.2, 0.45);
  return activity::NrtlParameterSet::from_tau_alpha(t12, t21, a);
}

activity::NrtlParameterSet random_nrtl(Rng& rng, activity::NrtlVariant v) {
  activity::NrtlParameterSet p;
  p.variant = v;
  p.a12 = uniform(rng, -1.5, 2.5);
  p.a21 = uniform(rng, -1.5, 2.5);
  p.c12 = uniform(rng, 0.15, 0.6);
  if (v != activity::NrtlVariant::three) {
    p.b12 = uniform(rng, -300.0, 300.0);
    p.b21 = uniform(rng, -300.0, 300.0);
    p.d12 = uniform(rng, -1e-3, 1e-3);
  }
  if (v == activity::NrtlVariant::ten) {
    p.e12 = uniform(rng, -0.2, 0.2);
    p.e21 = uniform(rng, -0.2, 0.2);
    p.f12 = uniform(rng, -1e-3, 1e-3);
    p.f21 = uniform(rng, -1e-3, 1e-3);
    // Keep tau of order one over 250-450 K.
    p.a12 -= p.e12 * std::log(350.0) + p.f12 * 350.0;
    p.a21 -= p.e21 * std::log(350.0) + p.f21 * 350.0;
  }
  return p;
}

vle::BinarySystem system(AntoineParameterSet a1, AntoineParameterSet a2,
                         std::shared_ptr<const activity::ActivityModel> model) {
  return {std::move(a1), std::move(a2), std::move(model)};
}

const ProviderRegistry& demo_registry() {
  static const ProviderRegistry registry = api::build_registry(api::default_config());
  return registry;
}

Component component(const std::string& smiles) {
  return register_component(smiles, demo_registry());
}

vle::BinarySystem demo_system(const std::string& s1, const std::string& s2,
                              const std::string& model) {
  const auto c1 = component(s1);
  const auto c2 = component(s2);
  return {resolve_antoine(c1, demo_registry()), resolve_antoine(c2, demo_registry()),
          resolve_activity_model(model, c1, c2, demo_registry())};
}

}  // namespace testsys
