#pragma once

#include "optomech/params.hpp"

namespace optomech {

struct MeanFieldSolution;

/// Data of the two-mode squeezing transform S(r) that removes the parametric
/// coupling. Rates and frequencies in kappa units.
struct SqueezedFrame {
  double r = 0.0;
  double omega1p = 0.0;
  double omega2p = 0.0;
  double G = 0.0;  // linearised coupling g0 |alpha|
  double G1p = 0.0;
  double G2p = 0.0;
  double gamma1p = 0.0;
  double gamma2p = 0.0;
  double nth1p = 0.0;
  double nth2p = 0.0;
};

/// r = 1/4 ln[(D1 + D2 + 2 l0) / (D1 + D2 - 2 l0)]. Throws
/// ParametricInstabilityError unless D1 + D2 > 2 l0 >= 0.
double squeezing_parameter(double delta1, double delta2, double lambda0);

struct TransformedFrequencies {
  double omega1p;
  double omega2p;
};
TransformedFrequencies transformed_frequencies(double delta1, double delta2,
                                               double lambda0);

struct TransformedBaths {
  double gamma1p;
  double gamma2p;
  double nth1p;  // NaN when gamma1p <= 0
  double nth2p;  // NaN when gamma2p <= 0
};
/// Rotating-wave baths seen by the squeezed modes. Never throws; callers
/// decide what to do with non-positive rates.
TransformedBaths transformed_baths(double gamma1, double gamma2, double nth1,
                                   double nth2, double r);

/// Resolves the configured cavity detuning to a number (kappa units).
double working_detuning(const PhysicalConfig& cfg);

/// Throws ParametricInstabilityError or InvalidBathError.
SqueezedFrame build_squeezed_frame(const PhysicalConfig& cfg, const MeanFieldSolution& mf);
SqueezedFrame build_squeezed_frame(const PhysicalConfig& cfg, double coupling);

}  // namespace optomech
