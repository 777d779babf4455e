#pragma once

#include <complex>

#include "optomech/params.hpp"

namespace optomech {

struct MeanFieldOptions {
  double tolerance = 1e-12;  // relative change in alpha between iterates
  double damping = 0.5;      // weight of the previous iterate
  int max_iterations = 10000;
};

/// Self-consistent classical amplitudes around which the dynamics is
/// linearised. The drive is taken real and positive, which makes beta1 and
/// beta2 real; alpha carries the phase.
struct MeanFieldSolution {
  std::complex<double> alpha;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double delta_a = 0.0;  // shifted cavity detuning (working point), kappa units
  double eps_d = 0.0;    // drive amplitude, kappa units
  int iterations = 0;
  double residual = 0.0;  // max absolute residual of the three amplitude equations

  /// Unshifted detuning delta_a = omega_a - omega_d = Delta_a + 2 g0 Re(beta1).
  double bare_detuning(double g0) const { return delta_a + 2.0 * g0 * beta1; }
};

/// Residuals of the three stationary amplitude equations at `s`.
struct MeanFieldResiduals {
  double phonon2;  // |Delta2 beta2 + lambda0 beta1*|
  double phonon1;  // |Delta1 beta1 - g0 |alpha|^2 + lambda0 beta2*|
  double cavity;   // |(Delta_a - i/2) alpha - 2 g0 alpha Re(beta1) + eps_d|
  double max() const;
};
MeanFieldResiduals mean_field_residuals(const PhysicalConfig& cfg,
                                        const MeanFieldSolution& s);

/// Damped fixed-point solve of the amplitude equations with Delta_a held at
/// the configured working point.
///
/// Throws DegenerateConfigError when Delta2 = 0 or Delta1 - lambda0^2/Delta2
/// = 0, and ConvergenceError when the iteration does not settle.
MeanFieldSolution solve_mean_field(const PhysicalConfig& cfg,
                                   const MeanFieldOptions& options = {});

/// Input power (W) for which solve_mean_field returns |alpha| = target.
double power_for_target_alpha(const PhysicalConfig& cfg, double target_alpha_abs);

/// Same inversion expressed as eps_d / kappa.
double drive_for_target_alpha(const PhysicalConfig& cfg, double target_alpha_abs);

}  // namespace optomech
