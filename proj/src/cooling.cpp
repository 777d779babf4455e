#include "optomech/cooling.hpp"

#include "optomech/errors.hpp"

namespace optomech {

namespace {

double lorentzian_rate(double kappa, double coupling, double detuning) {
  return kappa * coupling * coupling / (0.25 * kappa * kappa + detuning * detuning);
}

}  // namespace

CoolingReport cooling_rates(const SqueezedFrame& sf, double delta_a, double kappa) {
  CoolingReport rep;
  rep.delta_a_tilde = delta_a;
  rep.gamma_minus1 = lorentzian_rate(kappa, sf.G1p, delta_a - sf.omega1p);
  rep.gamma_plus1 = lorentzian_rate(kappa, sf.G1p, delta_a + sf.omega1p);
  rep.gamma_minus2 = lorentzian_rate(kappa, sf.G2p, delta_a - sf.omega2p);
  rep.gamma_plus2 = lorentzian_rate(kappa, sf.G2p, delta_a + sf.omega2p);
  rep.gamma_net1 = rep.gamma_minus1 - rep.gamma_plus1;
  rep.gamma_net2 = rep.gamma_minus2 - rep.gamma_plus2;
  return rep;
}

Occupations effective_occupations_analytic(const CoolingReport& report,
                                           const SqueezedFrame& sf) {
  const double den1 = sf.gamma1p + report.gamma_net1;
  const double den2 = sf.gamma2p + report.gamma_net2;
  if (!(den1 > 0.0) || !(den2 > 0.0)) {
    throw HeatingDominatedError("net damping of a squeezed mode is not positive");
  }
  return {(sf.gamma1p * sf.nth1p + report.gamma_plus1) / den1,
          (sf.gamma2p * sf.nth2p + report.gamma_plus2) / den2};
}

CoolingReport cooling_analysis(const SqueezedFrame& sf, double delta_a, double kappa) {
  auto rep = cooling_rates(sf, delta_a, kappa);
  const auto n = effective_occupations_analytic(rep, sf);
  rep.n_eff1 = n.n1;
  rep.n_eff2 = n.n2;
  return rep;
}

}  // namespace optomech
