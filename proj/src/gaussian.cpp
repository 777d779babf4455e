#include "optomech/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "optomech/errors.hpp"
#include "optomech/meanfield.hpp"

namespace optomech {

namespace {

void add_oscillator(Mat6& a, int x, double frequency, double damping) {
  a(x, x) = -0.5 * damping;
  a(x + 1, x + 1) = -0.5 * damping;
  a(x, x + 1) = frequency;
  a(x + 1, x) = -frequency;
}

// -(a + a^dag) k (b + b^dag) = -2 k x_a x_b.
void add_cavity_coupling(Mat6& a, int xb, double k) {
  a(quad::pa, xb) += 2.0 * k;
  a(xb + 1, quad::xa) += 2.0 * k;
}

void set_bath(Mat6& d, int x, double damping, double occupation) {
  d(x, x) = d(x + 1, x + 1) = 0.5 * damping * (2.0 * occupation + 1.0);
}

using LMat6 = Eigen::Matrix<long double, 6, 6>;

LMat6 lyapunov_residual(const Mat6& a, const Mat6& v, const Mat6& d) {
  const LMat6 al = a.cast<long double>();
  const LMat6 vl = v.cast<long double>();
  return al * vl + vl * al.transpose() + d.cast<long double>();
}

}  // namespace

LinearizedModel linearized_model(const PhysicalConfig& cfg, const MeanFieldSolution& mf) {
  LinearizedModel m;
  m.delta_a = mf.delta_a;
  m.delta1 = cfg.delta1;
  m.delta2 = cfg.delta2;
  m.lambda0 = cfg.lambda0;
  m.coupling1 = cfg.g0 * std::abs(mf.alpha);
  m.coupling2 = cfg.coupling_case == CouplingCase::Two ? cfg.g2_over_g1 * m.coupling1 : 0.0;
  m.gamma1 = cfg.gamma1;
  m.gamma2 = cfg.gamma2;
  m.nth1 = cfg.nth1;
  m.nth2 = cfg.nth2;
  return m;
}

DriftDiffusion build_drift_diffusion(const LinearizedModel& m, Frame frame,
                                     const SqueezedFrame& sf) {
  DriftDiffusion dd;
  dd.frame = frame;
  dd.coupling_case = m.coupling2 != 0.0 ? CouplingCase::Two : CouplingCase::One;
  dd.drift.setZero();
  dd.diffusion.setZero();

  add_oscillator(dd.drift, quad::xa, m.delta_a, m.kappa);
  set_bath(dd.diffusion, quad::xa, m.kappa, 0.0);

  if (frame == Frame::Original) {
    add_oscillator(dd.drift, quad::x1, m.delta1, m.gamma1);
    add_oscillator(dd.drift, quad::x2, m.delta2, m.gamma2);
    add_cavity_coupling(dd.drift, quad::x1, m.coupling1);
    add_cavity_coupling(dd.drift, quad::x2, m.coupling2);
    // lambda0 (b1^dag b2^dag + b1 b2) = lambda0 (x1 x2 - p1 p2)
    dd.drift(quad::x1, quad::p2) -= m.lambda0;
    dd.drift(quad::p1, quad::x2) -= m.lambda0;
    dd.drift(quad::x2, quad::p1) -= m.lambda0;
    dd.drift(quad::p2, quad::x1) -= m.lambda0;
    set_bath(dd.diffusion, quad::x1, m.gamma1, m.nth1);
    set_bath(dd.diffusion, quad::x2, m.gamma2, m.nth2);
  } else {
    const double c = std::cosh(sf.r);
    const double s = std::sinh(sf.r);
    add_oscillator(dd.drift, quad::x1, sf.omega1p, sf.gamma1p);
    add_oscillator(dd.drift, quad::x2, sf.omega2p, sf.gamma2p);
    add_cavity_coupling(dd.drift, quad::x1, c * m.coupling1 - s * m.coupling2);
    add_cavity_coupling(dd.drift, quad::x2, c * m.coupling2 - s * m.coupling1);
    set_bath(dd.diffusion, quad::x1, sf.gamma1p, sf.nth1p);
    set_bath(dd.diffusion, quad::x2, sf.gamma2p, sf.nth2p);
  }
  return dd;
}

DriftDiffusion build_drift_diffusion(const LinearizedModel& m) {
  return build_drift_diffusion(m, Frame::Original, SqueezedFrame{});
}

DriftDiffusion build_drift_diffusion(const PhysicalConfig& cfg, const MeanFieldSolution& mf,
                                     Frame frame, const SqueezedFrame& sf) {
  return build_drift_diffusion(linearized_model(cfg, mf), frame, sf);
}

double stability_margin(const Mat6& drift) {
  const Eigen::EigenSolver<Mat6> es(drift, /*computeEigenvectors=*/false);
  return es.eigenvalues().real().maxCoeff();
}

double stability_margin(const DriftDiffusion& dd) { return stability_margin(dd.drift); }

LyapunovSolution solve_lyapunov_steady(const DriftDiffusion& dd) {
  const Mat6& a = dd.drift;
  const Mat6& d = dd.diffusion;

  LyapunovSolution sol;
  sol.margin = stability_margin(a);
  if (!(sol.margin < 0.0)) {
    throw StabilityError("drift matrix is not Hurwitz (max Re lambda = " +
                             std::to_string(sol.margin) + ")",
                         sol.margin);
  }

  // vec(A V + V A^T) = (I kron A + A kron I) vec(V), column-major vec.
  using Mat36 = Eigen::Matrix<double, 36, 36>;
  using Vec36 = Eigen::Matrix<double, 36, 1>;
  Mat36 k = Mat36::Zero();
  for (int i = 0; i < 6; ++i) {
    k.block<6, 6>(6 * i, 6 * i) += a;
    for (int j = 0; j < 6; ++j) k.block<6, 6>(6 * i, 6 * j).diagonal().array() += a(i, j);
  }
  const Eigen::PartialPivLU<Mat36> lu(k);
  Mat6 v;
  Eigen::Map<Vec36>(v.data()) = lu.solve(-Eigen::Map<const Vec36>(d.data()));
  v = 0.5 * (v + v.transpose()).eval();

  // Refinement with the residual accumulated in extended precision.
  const double bound = 1e-10 * d.cwiseAbs().maxCoeff();
  for (int pass = 0; pass < 3; ++pass) {
    const Mat6 res = lyapunov_residual(a, v, d).cast<double>();
    if (res.cwiseAbs().maxCoeff() <= 0.01 * bound) break;
    Mat6 dv;
    Eigen::Map<Vec36>(dv.data()) = lu.solve(-Eigen::Map<const Vec36>(res.data()));
    v += 0.5 * (dv + dv.transpose());
  }
  sol.covariance = v;
  sol.residual = static_cast<double>(lyapunov_residual(a, v, d).cwiseAbs().maxCoeff());
  if (!std::isfinite(sol.residual) || sol.residual > bound) {
    throw NumericalError("Lyapunov residual " + std::to_string(sol.residual) +
                         " exceeds bound " + std::to_string(bound));
  }
  return sol;
}

Mat4 mechanical_block(const Mat6& v) { return v.bottomRightCorner<4, 4>(); }

Mat4 squeeze_symplectic(double r) {
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  Mat4 sm;
  // clang-format off
  sm <<  c, 0, -s, 0,
         0, c,  0, s,
        -s, 0,  c, 0,
         0, s,  0, c;
  // clang-format on
  return sm;
}

Mat4 apply_symplectic_squeeze(const Mat4& v, double r, SqueezeDirection direction) {
  const Mat4 sm = squeeze_symplectic(direction == SqueezeDirection::Forward ? r : -r);
  return sm * v * sm.transpose();
}

Mat4 two_mode_squeezed_thermal(double n1, double n2, double r) {
  const Mat4 thermal = Eigen::Vector4d(n1 + 0.5, n1 + 0.5, n2 + 0.5, n2 + 0.5).asDiagonal();
  return apply_symplectic_squeeze(thermal, r, SqueezeDirection::Forward);
}

Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& v) {
  const auto n = v.rows();
  if (n != v.cols() || n % 2 != 0) {
    throw DomainError("covariance must be square with even dimension");
  }
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; i += 2) {
    omega(i, i + 1) = 1.0;
    omega(i + 1, i) = -1.0;
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> es(omega * v, false);
  std::vector<double> mags(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) mags[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()(i));
  std::sort(mags.begin(), mags.end());
  // Eigenvalues come in pairs +-i nu.
  Eigen::VectorXd nu(n / 2);
  for (Eigen::Index i = 0; i < n / 2; ++i) {
    nu(i) = 0.5 * (mags[static_cast<std::size_t>(2 * i)] + mags[static_cast<std::size_t>(2 * i + 1)]);
  }
  return nu;
}

bool is_physical(const Eigen::MatrixXd& v, double tol) {
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > tol * scale) return false;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (v + v.transpose()),
                                                          Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues().minCoeff() > 0.0)) return false;
  return symplectic_eigenvalues(v).minCoeff() >= 0.5 - tol;
}

}  // namespace optomech
