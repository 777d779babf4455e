#pragma once

#include "optomech/measures.hpp"
#include "optomech/squeezed_frame.hpp"

namespace optomech {

/// Cavity-induced rates for the squeezed modes in the resolved-sideband,
/// weak-coupling limit. Kappa units.
struct CoolingReport {
  double gamma_minus1 = 0.0;
  double gamma_plus1 = 0.0;
  double gamma_minus2 = 0.0;
  double gamma_plus2 = 0.0;
  double gamma_net1 = 0.0;
  double gamma_net2 = 0.0;
  double n_eff1 = 0.0;
  double n_eff2 = 0.0;
  double delta_a_tilde = 0.0;
};

/// Gamma^-+_j = kappa G'_j^2 / (kappa^2/4 + (Delta_a -+ Omega'_j)^2).
/// Occupations are left at zero; see effective_occupations_analytic.
CoolingReport cooling_rates(const SqueezedFrame& sf, double delta_a, double kappa = 1.0);

/// n_j = (gamma'_j n'_j + Gamma^+_j) / (gamma'_j + Gamma_j). Throws
/// HeatingDominatedError when a denominator is not positive.
Occupations effective_occupations_analytic(const CoolingReport& report,
                                           const SqueezedFrame& sf);

/// Rates plus occupations.
CoolingReport cooling_analysis(const SqueezedFrame& sf, double delta_a, double kappa = 1.0);

}  // namespace optomech
