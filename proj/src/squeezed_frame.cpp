#include "optomech/squeezed_frame.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "optomech/errors.hpp"
#include "optomech/meanfield.hpp"

namespace optomech {

double squeezing_parameter(double delta1, double delta2, double lambda0) {
  const double sum = delta1 + delta2;
  if (!(lambda0 >= 0.0) || !(sum > 2.0 * lambda0)) {
    throw ParametricInstabilityError(
        "parametric instability: need Delta1 + Delta2 > 2 lambda0 >= 0 (Delta1 + Delta2 = " +
        std::to_string(sum) + ", 2 lambda0 = " + std::to_string(2.0 * lambda0) + ")");
  }
  // log1p keeps precision for small lambda0.
  return 0.25 * std::log1p(4.0 * lambda0 / (sum - 2.0 * lambda0));
}

TransformedFrequencies transformed_frequencies(double delta1, double delta2, double lambda0) {
  const double r = squeezing_parameter(delta1, delta2, lambda0);
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  const double cross = 2.0 * lambda0 * c * s;
  return {delta1 * c * c + delta2 * s * s - cross, delta1 * s * s + delta2 * c * c - cross};
}

TransformedBaths transformed_baths(double gamma1, double gamma2, double nth1, double nth2,
                                   double r) {
  const double c2 = std::cosh(r) * std::cosh(r);
  const double s2 = std::sinh(r) * std::sinh(r);
  TransformedBaths b{};
  b.gamma1p = gamma1 * c2 - gamma2 * s2;
  b.gamma2p = gamma2 * c2 - gamma1 * s2;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  b.nth1p = b.gamma1p > 0.0 ? (gamma1 * nth1 * c2 + gamma2 * (nth2 + 1.0) * s2) / b.gamma1p : nan;
  b.nth2p = b.gamma2p > 0.0 ? (gamma2 * nth2 * c2 + gamma1 * (nth1 + 1.0) * s2) / b.gamma2p : nan;
  return b;
}

double working_detuning(const PhysicalConfig& cfg) {
  if (const auto* d = std::get_if<double>(&cfg.delta_a)) return *d;
  const auto w = transformed_frequencies(cfg.delta1, cfg.delta2, cfg.lambda0);
  return std::get<OptimalDetuning>(cfg.delta_a) == OptimalDetuning::Omega1p ? w.omega1p
                                                                            : w.omega2p;
}

SqueezedFrame build_squeezed_frame(const PhysicalConfig& cfg, double coupling) {
  SqueezedFrame f;
  f.r = squeezing_parameter(cfg.delta1, cfg.delta2, cfg.lambda0);
  const auto w = transformed_frequencies(cfg.delta1, cfg.delta2, cfg.lambda0);
  f.omega1p = w.omega1p;
  f.omega2p = w.omega2p;
  f.G = coupling;
  f.G1p = coupling * std::cosh(f.r);
  f.G2p = coupling * std::sinh(f.r);

  const auto b = transformed_baths(cfg.gamma1, cfg.gamma2, cfg.nth1, cfg.nth2, f.r);
  if (!(b.gamma1p > 0.0) || !(b.gamma2p > 0.0)) {
    throw InvalidBathError("transformed damping rates must be positive (gamma'_1 = " +
                           std::to_string(b.gamma1p) + ", gamma'_2 = " +
                           std::to_string(b.gamma2p) + ")");
  }
  f.gamma1p = b.gamma1p;
  f.gamma2p = b.gamma2p;
  f.nth1p = b.nth1p;
  f.nth2p = b.nth2p;
  return f;
}

SqueezedFrame build_squeezed_frame(const PhysicalConfig& cfg, const MeanFieldSolution& mf) {
  return build_squeezed_frame(cfg, cfg.g0 * std::abs(mf.alpha));
}

}  // namespace optomech
