#pragma once

#include <array>
#include <string>

#include "propkit/activity/model.hpp"
#include "propkit/units.hpp"

namespace propkit::activity {

enum class NrtlVariant { three = 3, six = 6, ten = 10 };

// Throws InvalidInput for anything other than 3, 6 or 10.
NrtlVariant nrtl_variant_from_int(int n);
inline int to_int(NrtlVariant v) noexcept { return static_cast<int>(v); }

// Binary NRTL coefficients in the Aspen layout:
//
//   tau_ij  = a_ij + b_ij / T + e_ij ln T + f_ij T
//   alpha   = c_12 + d_12 (T - 273.15 K)
//   G_ij    = exp(-alpha tau_ij)
//
// The variant fixes which slots may be non-zero:
//   3  -> a12, a21, c12
//   6  -> a12, a21, b12, b21, c12, d12
//   10 -> all of the above plus e12, e21, f12, f21
struct NrtlParameterSet {
  double a12 = 0.0, a21 = 0.0;
  double b12 = 0.0, b21 = 0.0;  // K
  double e12 = 0.0, e21 = 0.0;
  double f12 = 0.0, f21 = 0.0;  // 1/K
  double c12 = 0.0;
  double d12 = 0.0;             // 1/K
  NrtlVariant variant = NrtlVariant::three;

  // Constant tau/alpha set (3-parameter variant).
  static NrtlParameterSet from_tau_alpha(double tau12, double tau21,
                                         double alpha);

  // Throws InvalidInput when a slot outside the variant is non-zero or a
  // coefficient is not finite.
  void validate() const;

  // Same mixture with the component order reversed.
  NrtlParameterSet swapped() const;

  // Values in canonical slot order a12,a21,b12,b21,e12,e21,f12,f21,c12,d12.
  std::array<double, 10> slots() const noexcept;
  static NrtlParameterSet from_slots(const std::array<double, 10>& s,
                                     NrtlVariant variant);

  friend bool operator==(const NrtlParameterSet&,
                         const NrtlParameterSet&) = default;
};

inline constexpr std::array<const char*, 10> kNrtlSlotNames = {
    "a12", "a21", "b12", "b21", "e12", "e21", "f12", "f21", "c12", "d12"};

struct NrtlState {
  double tau12 = 0.0;
  double tau21 = 0.0;
  double alpha = 0.0;
  double G12 = 1.0;
  double G21 = 1.0;
};

// Throws AlphaOutOfRange when alpha(T) is outside (0, 2).
NrtlState nrtl_tau_alpha(const NrtlParameterSet& params, Kelvin T);

// tau/alpha/G without the alpha window check; for optimizers that handle
// feasibility themselves.
NrtlState nrtl_state_unchecked(const NrtlParameterSet& params,
                               double T) noexcept;

// Renon form evaluated from an already computed state.
LnGamma nrtl_ln_gamma(const NrtlState& state, double x1) noexcept;

LnGamma nrtl_ln_gamma(const NrtlParameterSet& params, double x1, Kelvin T);

// Infinite-dilution limits: ln gamma1 at x1 -> 0 and ln gamma2 at x1 -> 1.
LnGamma nrtl_infinite_dilution(const NrtlState& state) noexcept;

// Human-readable equations of a variant, with the numeric values filled in.
std::string nrtl_equations(const NrtlParameterSet& params);

class NrtlModel final : public ActivityModel {
 public:
  explicit NrtlModel(NrtlParameterSet params, std::string name = "nrtl");

  std::string name() const override { return name_; }
  LnGamma ln_gamma(double x1, Kelvin T) const override;
  const NrtlParameterSet& parameters() const noexcept { return params_; }

 private:
  NrtlParameterSet params_;
  std::string name_;
};

}  // namespace propkit::activity
