#pragma once

#include <numbers>
#include <variant>

namespace optomech {

/// Reduced Planck constant in J*s.
inline constexpr double kHbar = 1.054571817e-34;

enum class CouplingCase {
  One,  // cavity couples to b1 only
  Two,  // cavity couples to b1 and b2
};

/// Cavity detuning resonant with a transformed mechanical frequency.
enum class OptimalDetuning { Omega1p, Omega2p };

/// Working-point cavity detuning: either a number (kappa units) or one of the
/// optimal detunings, resolved once the squeezing frequencies are known.
using DetuningSpec = std::variant<double, OptimalDetuning>;

struct DrivePower {
  double watts = 0.0;
};
struct DriveAmplitude {
  double over_kappa = 0.0;  // eps_d / kappa
};
using Drive = std::variant<DrivePower, DriveAmplitude>;

/// All system and drive parameters. Frequencies and rates are stored in units
/// of the cavity damping rate kappa; kappa itself and the drive frequency are
/// kept in Hz (ordinary frequency) and converted to rad/s on demand.
///
/// Defaults reproduce the reference working point: kappa = 2pi x 100 kHz,
/// omega_d = 2pi x 500 THz, g0 = 1e-4, lambda0 = 30, Delta1 = 30.8,
/// Delta2 = 30.2, gamma_j = 1e-5, Delta_a = Omega'_1, P = 35 nW.
struct PhysicalConfig {
  double kappa_hz = 1e5;
  double gamma1 = 1e-5;
  double gamma2 = 1e-5;
  double g0 = 1e-4;
  double lambda0 = 30.0;
  double delta1 = 30.8;
  double delta2 = 30.2;
  DetuningSpec delta_a = OptimalDetuning::Omega1p;
  double nth1 = 0.0;
  double nth2 = 0.0;
  double omega_d_hz = 5e14;
  Drive drive = DrivePower{3.5e-8};
  CouplingCase coupling_case = CouplingCase::One;
  // Ratio of the b2 to the b1 optomechanical coupling in case two.
  double g2_over_g1 = 1.0;

  double kappa_rad_s() const { return 2.0 * std::numbers::pi * kappa_hz; }
  double omega_d_rad_s() const { return 2.0 * std::numbers::pi * omega_d_hz; }

  /// Throws ConfigError when a field violates its invariant.
  void validate() const;
};

/// eps_d = sqrt(2 kappa P / (hbar omega_d)), all in SI (rad/s, W).
double drive_amplitude_from_power(double power_watts, double kappa_rad_s,
                                  double omega_d_rad_s);

/// Inverse of drive_amplitude_from_power.
double power_from_drive_amplitude(double eps_rad_s, double kappa_rad_s,
                                  double omega_d_rad_s);

/// eps_d / kappa for whichever drive form the config carries.
double drive_over_kappa(const PhysicalConfig& cfg);

}  // namespace optomech
