#include <doctest.h>

#include <cmath>

#include "optomech/cooling.hpp"
#include "optomech/errors.hpp"
#include "optomech/meanfield.hpp"
#include "optomech/squeezed_frame.hpp"

using namespace optomech;

namespace {

SqueezedFrame reference_frame() {
  const PhysicalConfig cfg;
  return build_squeezed_frame(cfg, 1e-4 * 100.0);
}

}  // namespace

TEST_CASE("resonant cooling rate is 4 G'^2 / kappa") {
  const auto sf = reference_frame();
  const auto rep1 = cooling_rates(sf, sf.omega1p);
  CHECK(rep1.gamma_minus1 == doctest::Approx(4 * sf.G1p * sf.G1p).epsilon(1e-14));
  CHECK(rep1.gamma_minus1 == doctest::Approx(1.31e-3).epsilon(3e-3));
  CHECK(rep1.gamma_plus1 == doctest::Approx(2.4e-6).epsilon(0.02));
  const auto rep2 = cooling_rates(sf, sf.omega2p);
  CHECK(rep2.gamma_minus2 == doctest::Approx(4 * sf.G2p * sf.G2p).epsilon(1e-14));
}

TEST_CASE("heating rate in the resolved-sideband limit") {
  const auto sf = reference_frame();
  const auto rep = cooling_rates(sf, sf.omega1p);
  const double approx = std::pow(sf.G1p / (2 * sf.omega1p), 2);
  CHECK(rep.gamma_plus1 == doctest::Approx(approx).epsilon(0.01));
}

TEST_CASE("zero coupling, zero rates, bare occupations") {
  auto sf = reference_frame();
  sf.G1p = sf.G2p = 0.0;
  const auto rep = cooling_analysis(sf, 5.8);
  CHECK(rep.gamma_minus1 == 0.0);
  CHECK(rep.gamma_plus2 == 0.0);
  CHECK(rep.n_eff1 == doctest::Approx(sf.nth1p));
  CHECK(rep.n_eff2 == doctest::Approx(sf.nth2p));
}

TEST_CASE("occupations at the reference point") {
  const auto sf = reference_frame();
  const auto rep = cooling_analysis(sf, sf.omega1p);
  CHECK(rep.n_eff1 == doctest::Approx(0.019).epsilon(0.02));
  CHECK(rep.n_eff1 == doctest::Approx(0.01911).epsilon(2e-3));
}

TEST_CASE("vanishing intrinsic damping leaves the sideband limit") {
  auto sf = reference_frame();
  sf.gamma1p = 1e-14;
  const auto rep = cooling_analysis(sf, sf.omega1p);
  const double limit = std::pow(1.0 / (4.0 * sf.omega1p), 2);
  CHECK(rep.n_eff1 == doctest::Approx(limit).epsilon(0.01));
  CHECK(rep.n_eff1 == doctest::Approx(1.9e-3).epsilon(0.03));
}

TEST_CASE("anti-damping is reported") {
  auto sf = reference_frame();
  // Blue sideband: Gamma^+ exceeds Gamma^-.
  const auto rep = cooling_rates(sf, -sf.omega1p);
  CHECK(rep.gamma_net1 < 0.0);
  CHECK_THROWS_AS(effective_occupations_analytic(rep, sf), HeatingDominatedError);
  CHECK_THROWS_AS(cooling_analysis(sf, -sf.omega1p), HeatingDominatedError);
}

TEST_CASE("cooling rate peaks exactly on resonance") {
  const auto sf = reference_frame();
  for (int mode = 0; mode < 2; ++mode) {
    const double omega = mode == 0 ? sf.omega1p : sf.omega2p;
    double best = -1.0, arg = 0.0;
    for (int i = 0; i <= 4000; ++i) {
      const double d = 3.0 + 5.0 * i / 4000.0;
      const auto rep = cooling_rates(sf, d);
      const double g = mode == 0 ? rep.gamma_minus1 : rep.gamma_minus2;
      if (g > best) {
        best = g;
        arg = d;
      }
    }
    CHECK(std::abs(arg - omega) <= 5.0 / 4000.0);
  }
}

TEST_CASE("occupation is smallest near the optimal detuning") {
  const auto sf = reference_frame();
  double best = 1e300, arg = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double d = 4.0 + 4.0 * i / 2000.0;
    const double n = cooling_analysis(sf, d).n_eff1;
    if (n < best) {
      best = n;
      arg = d;
    }
  }
  CHECK(std::abs(arg - sf.omega1p) <= 0.1);
}
