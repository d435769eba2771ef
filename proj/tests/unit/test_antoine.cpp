#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "propkit/antoine/antoine.hpp"
#include "propkit/error.hpp"
#include "systems.hpp"

using namespace propkit;
using antoine::Warning;

namespace {

AntoineParameterSet simple(double A, double B, double C) {
  return AntoineParameterSet::create(A, B, C, Kelvin{200.0}, Kelvin{500.0});
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidInput;
}

}  // namespace

TEST_CASE("zero exponent gives one pascal at every temperature") {
  const auto p = simple(0.0, 0.0, -20.0);
  for (double T : {150.0, 300.0, 450.0, 900.0})
    CHECK(antoine::vapor_pressure(p, Kelvin{T}).value == 1.0);
}

TEST_CASE("hand-evaluated exponent and its inverse") {
  const auto p = simple(4.0, 1200.0, -50.0);
  CHECK(antoine::vapor_pressure(p, Kelvin{350.0}).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(antoine::boiling_temperature(p, Pascal{1.0}).value ==
        doctest::Approx(350.0).epsilon(1e-15));
}

TEST_CASE("declared units convert to a pascal base") {
  const auto bar = AntoineParameterSet::create(4.00266, 1171.53, -48.784, Kelvin{286.18},
                                               Kelvin{342.69}, PressureUnit::bar);
  CHECK(bar.A_declared() == 4.00266);
  CHECK(bar.declared_unit() == PressureUnit::bar);
  const double expected = 1e5 * std::pow(10.0, 4.00266 - 1171.53 / (330.0 - 48.784));
  CHECK(antoine::vapor_pressure(bar, Kelvin{330.0}).value ==
        doctest::Approx(expected).epsilon(1e-13));
  const auto kpa = AntoineParameterSet::create(1.0, 0.0, 0.0, Kelvin{1.0}, Kelvin{2.0},
                                               PressureUnit::kPa);
  CHECK(antoine::vapor_pressure(kpa, Kelvin{1.5}).value == doctest::Approx(1e4).epsilon(1e-14));
}

TEST_CASE("singular and non-physical inputs") {
  const auto p = simple(4.0, 1200.0, -50.0);
  CHECK(code_of([&] { antoine::vapor_pressure(p, Kelvin{50.0}); }) == Errc::SingularTemperature);
  CHECK(code_of([&] { antoine::vapor_pressure(p, Kelvin{0.0}); }) == Errc::InvalidInput);
  CHECK(code_of([&] { antoine::boiling_temperature(p, Pascal{1e4}); }) == Errc::SingularPressure);
  const auto hot_c = simple(4.0, 1200.0, 100.0);
  CHECK(code_of([&] { antoine::boiling_temperature(hot_c, Pascal{1e-10}); }) ==
        Errc::NonPhysical);
  CHECK(code_of([&] { antoine::boiling_temperature(p, Pascal{-1.0}); }) == Errc::InvalidInput);
  CHECK(code_of([&] {
          AntoineParameterSet::create(1, 1, 1, Kelvin{400.0}, Kelvin{300.0});
        }) == Errc::InvalidInput);
  CHECK(code_of([&] {
          AntoineParameterSet::create(NAN, 1, 1, Kelvin{300.0}, Kelvin{400.0});
        }) == Errc::InvalidInput);
}

TEST_CASE("range warnings") {
  // p(T) = 10 kPa at 350 K, range [250, 400] K.
  const auto p = AntoineParameterSet::create(4.0 + 1200.0 / 300.0, 1200.0, -50.0, Kelvin{250.0},
                                             Kelvin{400.0});
  CHECK(antoine::range_check(p, Kelvin{350.0}).empty());
  CHECK(antoine::range_check(p, Kelvin{420.0}) ==
        std::vector<Warning>{Warning::ExtrapolatedTemperature});
  const double T_half_kpa = antoine::boiling_temperature(p, Pascal{500.0}).value;
  REQUIRE(T_half_kpa > 250.0);
  CHECK(antoine::range_check(p, Kelvin{T_half_kpa}) ==
        std::vector<Warning>{Warning::LowPressureRegime});
  const auto both = antoine::evaluate(p, Kelvin{240.0});
  CHECK(both.warnings.size() == 2);
  CHECK(antoine::to_string(Warning::LowPressureRegime) == "LowPressureRegime");
}

TEST_CASE("round trip over random parameter sets") {
  testsys::Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto p = testsys::random_antoine(rng);
    const double T0 = testsys::uniform(rng, 280.0, 420.0);
    const auto ps = antoine::vapor_pressure(p, Kelvin{T0});
    CHECK(ps.value == doctest::Approx(oracle::antoine_pa(p.A(), p.B(), p.C(), T0)).epsilon(1e-13));
    const double T1 = antoine::boiling_temperature(p, ps).value;
    CHECK(std::abs(T1 - T0) <= 1e-9 * T0);
  }
}

TEST_CASE("vapor pressure increases with temperature") {
  testsys::Rng rng(12);
  for (int k = 0; k < 10; ++k) {
    const auto p = testsys::random_antoine(rng);
    double last = 0.0;
    for (double T = 250.0; T <= 500.0; T += 0.05) {
      const double v = antoine::vapor_pressure(p, Kelvin{T}).value;
      REQUIRE(v > last);
      last = v;
    }
  }
}

TEST_CASE("log-pressure derivative matches a central difference") {
  const auto p = simple(9.5, 1500.0, -45.0);
  const double T = 340.0, h = 1e-4;
  const double fd = (std::log(antoine::vapor_pressure(p, Kelvin{T + h}).value) -
                     std::log(antoine::vapor_pressure(p, Kelvin{T - h}).value)) /
                    (2 * h);
  CHECK(antoine::dlnp_dT(p, Kelvin{T}) == doctest::Approx(fd).epsilon(1e-7));
}
