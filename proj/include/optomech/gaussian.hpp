#pragma once

#include <Eigen/Dense>

#include "optomech/params.hpp"
#include "optomech/squeezed_frame.hpp"

namespace optomech {

struct MeanFieldSolution;

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat4 = Eigen::Matrix4d;

// Quadrature ordering used everywhere: (x_a, p_a, x_1, p_1, x_2, p_2) with
// x = (b + b^dag)/sqrt2, p = -i (b - b^dag)/sqrt2. Vacuum covariance is I/2.
namespace quad {
inline constexpr int xa = 0, pa = 1, x1 = 2, p1 = 3, x2 = 4, p2 = 5;
}

/// Parameters of the shifted quadratic model, kappa units:
///   H = Da a^dag a + D1 b1^dag b1 + D2 b2^dag b2
///       - (a + a^dag) [G1 (b1 + b1^dag) + G2 (b2 + b2^dag)]
///       + l0 (b1^dag b2^dag + b1 b2)
/// with a zero-temperature cavity bath and thermal mechanical baths.
struct LinearizedModel {
  double kappa = 1.0;
  double delta_a = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double lambda0 = 0.0;
  double coupling1 = 0.0;
  double coupling2 = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double nth1 = 0.0;
  double nth2 = 0.0;
};

LinearizedModel linearized_model(const PhysicalConfig& cfg, const MeanFieldSolution& mf);

enum class Frame { Original, Transformed };

struct DriftDiffusion {
  Mat6 drift;
  Mat6 diffusion;
  Frame frame = Frame::Original;
  CouplingCase coupling_case = CouplingCase::One;
};

/// Drift and diffusion of the linear Langevin equations dxi = A xi dt + noise.
/// The transformed frame uses the squeezed frequencies and rotating-wave baths
/// of `sf`; the optomechanical couplings are rotated by S(r) from the model's
/// (so case two picks up the cosh r - sinh r factor).
DriftDiffusion build_drift_diffusion(const LinearizedModel& m, Frame frame,
                                     const SqueezedFrame& sf);
DriftDiffusion build_drift_diffusion(const LinearizedModel& m);
DriftDiffusion build_drift_diffusion(const PhysicalConfig& cfg, const MeanFieldSolution& mf,
                                     Frame frame, const SqueezedFrame& sf);

/// Max real part of the drift eigenvalues; negative iff stable.
double stability_margin(const DriftDiffusion& dd);
double stability_margin(const Mat6& drift);

struct LyapunovSolution {
  Mat6 covariance;
  double residual = 0.0;  // max |A V + V A^T + D|
  double margin = 0.0;
};

/// Solves A V + V A^T + D = 0 for the steady covariance. Throws StabilityError
/// when A is not Hurwitz and NumericalError when the residual bound
/// |A V + V A^T + D|_max <= 1e-10 |D|_max cannot be met.
LyapunovSolution solve_lyapunov_steady(const DriftDiffusion& dd);

/// Mechanical 4x4 block (x1, p1, x2, p2) of a full covariance.
Mat4 mechanical_block(const Mat6& v);

enum class SqueezeDirection { Forward, Inverse };

/// 4x4 symplectic matrix of S(r) acting on (x1, p1, x2, p2):
/// x1 -> c x1 - s x2, p1 -> c p1 + s p2 and symmetrically for mode 2.
Mat4 squeeze_symplectic(double r);

/// Forward maps transformed-basis covariances to the original basis,
/// V -> S V S^T; Inverse uses -r.
Mat4 apply_symplectic_squeeze(const Mat4& v, double r, SqueezeDirection direction);

/// Covariance of S(r) applied to a product of thermal states (n1, n2).
Mat4 two_mode_squeezed_thermal(double n1, double n2, double r);

/// Symplectic eigenvalues of an even-dimensional covariance (ascending).
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& v);

/// True when every symplectic eigenvalue is >= 1/2 - tol.
bool is_physical(const Eigen::MatrixXd& v, double tol = 1e-9);

}  // namespace optomech
