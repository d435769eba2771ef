#include "propkit/activity/nrtl.hpp"

#include <cmath>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit::activity {

namespace {

constexpr double sq(double v) noexcept { return v * v; }

}  // namespace

NrtlVariant nrtl_variant_from_int(int n) {
  switch (n) {
    case 3: return NrtlVariant::three;
    case 6: return NrtlVariant::six;
    case 10: return NrtlVariant::ten;
    default:
      throw Error(Errc::InvalidInput, "activity",
                  "NRTL variant must be 3, 6 or 10, got " + std::to_string(n));
  }
}

NrtlParameterSet NrtlParameterSet::from_tau_alpha(double tau12, double tau21,
                                                  double alpha) {
  NrtlParameterSet p;
  p.a12 = tau12;
  p.a21 = tau21;
  p.c12 = alpha;
  p.variant = NrtlVariant::three;
  return p;
}

void NrtlParameterSet::validate() const {
  for (double v : slots()) {
    if (!std::isfinite(v)) {
      throw Error(Errc::InvalidInput, "activity",
                  "NRTL coefficients must be finite");
    }
  }
  const bool temperature_free = b12 == 0.0 && b21 == 0.0 && d12 == 0.0;
  const bool log_linear_free =
      e12 == 0.0 && e21 == 0.0 && f12 == 0.0 && f21 == 0.0;
  if (variant == NrtlVariant::three && !(temperature_free && log_linear_free)) {
    throw Error(Errc::InvalidInput, "activity",
                "3-parameter NRTL allows only a12, a21 and c12");
  }
  if (variant == NrtlVariant::six && !log_linear_free) {
    throw Error(Errc::InvalidInput, "activity",
                "6-parameter NRTL does not use e12, e21, f12, f21");
  }
}

NrtlParameterSet NrtlParameterSet::swapped() const {
  NrtlParameterSet p = *this;
  std::swap(p.a12, p.a21);
  std::swap(p.b12, p.b21);
  std::swap(p.e12, p.e21);
  std::swap(p.f12, p.f21);
  return p;
}

std::array<double, 10> NrtlParameterSet::slots() const noexcept {
  return {a12, a21, b12, b21, e12, e21, f12, f21, c12, d12};
}

NrtlParameterSet NrtlParameterSet::from_slots(const std::array<double, 10>& s,
                                              NrtlVariant variant) {
  NrtlParameterSet p;
  p.a12 = s[0];
  p.a21 = s[1];
  p.b12 = s[2];
  p.b21 = s[3];
  p.e12 = s[4];
  p.e21 = s[5];
  p.f12 = s[6];
  p.f21 = s[7];
  p.c12 = s[8];
  p.d12 = s[9];
  p.variant = variant;
  return p;
}

NrtlState nrtl_state_unchecked(const NrtlParameterSet& p, double T) noexcept {
  NrtlState s;
  const double lnT = std::log(T);
  s.tau12 = p.a12 + p.b12 / T + p.e12 * lnT + p.f12 * T;
  s.tau21 = p.a21 + p.b21 / T + p.e21 * lnT + p.f21 * T;
  s.alpha = p.c12 + p.d12 * (T - kZeroCelsius);
  s.G12 = std::exp(-s.alpha * s.tau12);
  s.G21 = std::exp(-s.alpha * s.tau21);
  return s;
}

NrtlState nrtl_tau_alpha(const NrtlParameterSet& params, Kelvin T) {
  if (!(T.value > 0.0)) {
    throw Error(Errc::InvalidInput, "activity", "temperature must be > 0 K");
  }
  NrtlState s = nrtl_state_unchecked(params, T.value);
  if (!(s.alpha > 0.0 && s.alpha < 2.0)) {
    std::ostringstream msg;
    msg << "NRTL alpha = " << s.alpha << " at T = " << T.value
        << " K is outside (0, 2)";
    throw Error(Errc::AlphaOutOfRange, "activity", msg.str());
  }
  if (!std::isfinite(s.tau12) || !std::isfinite(s.tau21) ||
      !std::isfinite(s.G12) || !std::isfinite(s.G21)) {
    throw Error(Errc::NonPhysical, "activity",
                "NRTL interaction terms are not finite at this temperature");
  }
  return s;
}

LnGamma nrtl_ln_gamma(const NrtlState& s, double x1) noexcept {
  const double x2 = 1.0 - x1;
  const double d1 = x1 + x2 * s.G21;
  const double d2 = x2 + x1 * s.G12;
  // Written so that swapping the components mirrors the two expressions term
  // for term.
  LnGamma out;
  out.ln_gamma1 = x2 * x2 * (s.tau21 * sq(s.G21 / d1) + s.tau12 * s.G12 / sq(d2));
  out.ln_gamma2 = x1 * x1 * (s.tau12 * sq(s.G12 / d2) + s.tau21 * s.G21 / sq(d1));
  return out;
}

LnGamma nrtl_ln_gamma(const NrtlParameterSet& params, double x1, Kelvin T) {
  if (!(x1 >= 0.0 && x1 <= 1.0)) {
    throw Error(Errc::InvalidInput, "activity", "x1 must lie in [0, 1]");
  }
  return nrtl_ln_gamma(nrtl_tau_alpha(params, T), x1);
}

LnGamma nrtl_infinite_dilution(const NrtlState& s) noexcept {
  return {s.tau21 + s.tau12 * s.G12, s.tau12 + s.tau21 * s.G21};
}

std::string nrtl_equations(const NrtlParameterSet& p) {
  std::ostringstream out;
  out.precision(17);
  out << "NRTL, " << to_int(p.variant) << "-parameter form\n"
      << "ln(gamma1) = x2^2 * [tau21 * (G21 / (x1 + x2*G21))^2"
         " + tau12 * G12 / (x2 + x1*G12)^2]\n"
      << "ln(gamma2) = x1^2 * [tau12 * (G12 / (x2 + x1*G12))^2"
         " + tau21 * G21 / (x1 + x2*G21)^2]\n"
      << "G12 = exp(-alpha * tau12), G21 = exp(-alpha * tau21)\n";
  switch (p.variant) {
    case NrtlVariant::three:
      out << "tau12 = a12\ntau21 = a21\nalpha = c12\n";
      break;
    case NrtlVariant::six:
      out << "tau12 = a12 + b12/T\ntau21 = a21 + b21/T\n"
             "alpha = c12 + d12*(T - 273.15 K)\n";
      break;
    case NrtlVariant::ten:
      out << "tau12 = a12 + b12/T + e12*ln(T) + f12*T\n"
             "tau21 = a21 + b21/T + e21*ln(T) + f21*T\n"
             "alpha = c12 + d12*(T - 273.15 K)\n";
      break;
  }
  const auto values = p.slots();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool used =
        p.variant == NrtlVariant::ten ||
        (p.variant == NrtlVariant::six && (i < 4 || i >= 8)) ||
        (p.variant == NrtlVariant::three && (i < 2 || i == 8));
    if (used) out << kNrtlSlotNames[i] << " = " << values[i] << "\n";
  }
  return out.str();
}

NrtlModel::NrtlModel(NrtlParameterSet params, std::string name)
    : params_(params), name_(std::move(name)) {
  params_.validate();
}

LnGamma NrtlModel::ln_gamma(double x1, Kelvin T) const {
  return nrtl_ln_gamma(params_, x1, T);
}

}  // namespace propkit::activity
