#pragma once

#include "optomech/params.hpp"
#include "optomech/squeezed_frame.hpp"

namespace optomech {

/// Ratio above which "a >> b" is taken to hold.
inline constexpr double kDominanceRatio = 5.0;

struct ValidityReport {
  // min(Delta_a, Omega'_j) / max(G'_j, gamma_j (nth_j + 1)); saturates at
  // DBL_MAX when the denominator vanishes.
  double ratio_rwa_drive = 0.0;
  // Omega'_j / kappa and kappa / G'_j.
  double omega1p_over_kappa = 0.0;
  double omega2p_over_kappa = 0.0;
  double kappa_over_G1p = 0.0;
  double kappa_over_G2p = 0.0;
  bool cooling_regime = false;
  bool gamma_prime_positive = false;
};

/// Regime diagnostics at the working point `delta_a`. Never throws.
ValidityReport check_validity(const PhysicalConfig& cfg, const SqueezedFrame& frame,
                              double delta_a);

}  // namespace optomech
