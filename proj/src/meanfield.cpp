#include "optomech/meanfield.hpp"

#include <algorithm>
#include <cmath>

#include "optomech/errors.hpp"
#include "optomech/squeezed_frame.hpp"

namespace optomech {

namespace {

using cplx = std::complex<double>;

// beta1 = g0 |alpha|^2 / (Delta1 - lambda0^2 / Delta2); returns the denominator.
double mechanical_stiffness(const PhysicalConfig& cfg) {
  if (cfg.delta2 == 0.0) {
    throw DegenerateConfigError("degenerate mechanical response: Delta2 = 0");
  }
  const double k = cfg.delta1 - cfg.lambda0 * cfg.lambda0 / cfg.delta2;
  if (k == 0.0) {
    throw DegenerateConfigError("degenerate mechanical response: Delta1 - lambda0^2/Delta2 = 0");
  }
  return k;
}

}  // namespace

double MeanFieldResiduals::max() const { return std::max({phonon2, phonon1, cavity}); }

MeanFieldResiduals mean_field_residuals(const PhysicalConfig& cfg, const MeanFieldSolution& s) {
  const cplx b1(s.beta1, 0.0);
  const cplx b2(s.beta2, 0.0);
  MeanFieldResiduals res{};
  res.phonon2 = std::abs(cfg.delta2 * b2 + cfg.lambda0 * std::conj(b1));
  res.phonon1 = std::abs(cfg.delta1 * b1 - cfg.g0 * std::norm(s.alpha) +
                         cfg.lambda0 * std::conj(b2));
  res.cavity = std::abs((s.delta_a - cplx(0.0, 0.5)) * s.alpha -
                        2.0 * cfg.g0 * s.alpha * s.beta1 + s.eps_d);
  return res;
}

MeanFieldSolution solve_mean_field(const PhysicalConfig& cfg, const MeanFieldOptions& options) {
  const double stiffness = mechanical_stiffness(cfg);
  MeanFieldSolution s;
  s.delta_a = working_detuning(cfg);
  s.eps_d = drive_over_kappa(cfg);

  auto betas = [&](cplx alpha) {
    const double b1 = cfg.g0 * std::norm(alpha) / stiffness;
    return std::pair{b1, -cfg.lambda0 * b1 / cfg.delta2};
  };
  auto cavity_response = [&](double b1) {
    return -s.eps_d / (s.delta_a - cplx(0.0, 0.5) - 2.0 * cfg.g0 * b1);
  };

  // Start from the decoupled-cavity amplitude.
  cplx alpha = cavity_response(0.0);
  bool converged = false;
  int it = 0;
  while (it < options.max_iterations) {
    ++it;
    const cplx next = cavity_response(betas(alpha).first);
    const double change = std::abs(next - alpha);
    if (change <= options.tolerance * std::max(std::abs(next), 1e-300)) {
      alpha = next;
      converged = true;
      break;
    }
    alpha = options.damping * alpha + (1.0 - options.damping) * next;
  }

  s.alpha = alpha;
  std::tie(s.beta1, s.beta2) = betas(alpha);
  s.iterations = it;
  s.residual = mean_field_residuals(cfg, s).max();
  if (!converged) {
    throw ConvergenceError("mean-field iteration did not converge after " +
                               std::to_string(it) + " iterations",
                           s.residual);
  }
  return s;
}

double drive_for_target_alpha(const PhysicalConfig& cfg, double target_alpha_abs) {
  if (!(target_alpha_abs >= 0.0)) throw DomainError("target |alpha| must be non-negative");
  const double stiffness = mechanical_stiffness(cfg);
  const double beta1 = cfg.g0 * target_alpha_abs * target_alpha_abs / stiffness;
  const double delta_a = working_detuning(cfg);
  return target_alpha_abs * std::abs(cplx(delta_a - 2.0 * cfg.g0 * beta1, -0.5));
}

double power_for_target_alpha(const PhysicalConfig& cfg, double target_alpha_abs) {
  const double eps = drive_for_target_alpha(cfg, target_alpha_abs) * cfg.kappa_rad_s();
  return power_from_drive_amplitude(eps, cfg.kappa_rad_s(), cfg.omega_d_rad_s());
}

}  // namespace optomech
