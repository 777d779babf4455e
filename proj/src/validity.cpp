#include "optomech/validity.hpp"

#include <algorithm>
#include <limits>

namespace optomech {

namespace {

double safe_ratio(double num, double den) {
  num = std::max(num, 0.0);
  if (den <= 0.0) return num > 0.0 ? std::numeric_limits<double>::max() : 0.0;
  return std::min(num / den, std::numeric_limits<double>::max());
}

}  // namespace

ValidityReport check_validity(const PhysicalConfig& cfg, const SqueezedFrame& frame,
                              double delta_a) {
  ValidityReport rep;
  const double fast = std::min({delta_a, frame.omega1p, frame.omega2p});
  const double slow = std::max({std::abs(frame.G1p), std::abs(frame.G2p),
                                cfg.gamma1 * (cfg.nth1 + 1.0), cfg.gamma2 * (cfg.nth2 + 1.0)});
  rep.ratio_rwa_drive = safe_ratio(fast, slow);
  rep.omega1p_over_kappa = std::max(frame.omega1p, 0.0);
  rep.omega2p_over_kappa = std::max(frame.omega2p, 0.0);
  rep.kappa_over_G1p = safe_ratio(1.0, std::abs(frame.G1p));
  rep.kappa_over_G2p = safe_ratio(1.0, std::abs(frame.G2p));
  rep.cooling_regime = rep.omega1p_over_kappa >= kDominanceRatio &&
                       rep.omega2p_over_kappa >= kDominanceRatio &&
                       rep.kappa_over_G1p >= kDominanceRatio &&
                       rep.kappa_over_G2p >= kDominanceRatio;

  const auto baths = transformed_baths(cfg.gamma1, cfg.gamma2, cfg.nth1, cfg.nth2, frame.r);
  rep.gamma_prime_positive = baths.gamma1p > 0.0 && baths.gamma2p > 0.0;
  return rep;
}

}  // namespace optomech
