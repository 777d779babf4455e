#include "optomech/params.hpp"

#include <cmath>
#include <string>

#include "optomech/errors.hpp"

namespace optomech {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void PhysicalConfig::validate() const {
  require(finite(kappa_hz) && kappa_hz > 0.0, "kappa_hz must be positive");
  require(finite(gamma1) && gamma1 >= 0.0, "gamma1_over_kappa must be >= 0");
  require(finite(gamma2) && gamma2 >= 0.0, "gamma2_over_kappa must be >= 0");
  require(finite(g0), "g0_over_kappa must be finite");
  require(finite(lambda0) && lambda0 >= 0.0, "lambda0_over_kappa must be >= 0");
  require(finite(delta1) && finite(delta2), "mechanical detunings must be finite");
  require(finite(nth1) && nth1 >= 0.0, "nth1 must be >= 0");
  require(finite(nth2) && nth2 >= 0.0, "nth2 must be >= 0");
  require(finite(omega_d_hz) && omega_d_hz > 0.0, "omega_d_hz must be positive");
  require(finite(g2_over_g1), "g2_over_g1 must be finite");
  if (const auto* d = std::get_if<double>(&delta_a)) {
    require(finite(*d), "delta_a_over_kappa must be finite");
  }
  if (const auto* p = std::get_if<DrivePower>(&drive)) {
    require(finite(p->watts) && p->watts >= 0.0, "power_watts must be >= 0");
  } else {
    const double e = std::get<DriveAmplitude>(drive).over_kappa;
    require(finite(e) && e >= 0.0, "eps_d_over_kappa must be >= 0");
  }
}

double drive_amplitude_from_power(double power_watts, double kappa_rad_s,
                                  double omega_d_rad_s) {
  if (!(power_watts >= 0.0)) throw DomainError("drive power must be non-negative");
  if (!(kappa_rad_s > 0.0) || !(omega_d_rad_s > 0.0)) {
    throw DomainError("kappa and omega_d must be positive");
  }
  return std::sqrt(2.0 * kappa_rad_s * power_watts / (kHbar * omega_d_rad_s));
}

double power_from_drive_amplitude(double eps_rad_s, double kappa_rad_s,
                                  double omega_d_rad_s) {
  if (!(kappa_rad_s > 0.0) || !(omega_d_rad_s > 0.0)) {
    throw DomainError("kappa and omega_d must be positive");
  }
  return eps_rad_s * eps_rad_s * kHbar * omega_d_rad_s / (2.0 * kappa_rad_s);
}

double drive_over_kappa(const PhysicalConfig& cfg) {
  if (const auto* p = std::get_if<DrivePower>(&cfg.drive)) {
    return drive_amplitude_from_power(p->watts, cfg.kappa_rad_s(), cfg.omega_d_rad_s()) /
           cfg.kappa_rad_s();
  }
  return std::get<DriveAmplitude>(cfg.drive).over_kappa;
}

}  // namespace optomech
