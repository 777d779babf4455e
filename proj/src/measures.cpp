#include "optomech/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "optomech/errors.hpp"

namespace optomech {

namespace {

using LMat4 = Eigen::Matrix<long double, 4, 4>;

long double det2(long double a, long double b, long double c, long double d) {
  return a * d - b * c;
}

// Squeezed-state covariances have entries ~ e^{2r} while det V stays 1/16, so
// the determinant is accumulated in extended precision.
long double det4(const Mat4& v) { return v.cast<long double>().determinant(); }

}  // namespace

EntanglementReport logarithmic_negativity(const Mat4& v) {
  if (!is_physical(v)) throw DomainError("covariance matrix is not physical");

  const LMat4 vl = v.cast<long double>();
  const long double det_b = det2(vl(0, 0), vl(0, 1), vl(1, 0), vl(1, 1));
  const long double det_bp = det2(vl(2, 2), vl(2, 3), vl(3, 2), vl(3, 3));
  const long double det_c = det2(vl(0, 2), vl(0, 3), vl(1, 2), vl(1, 3));
  const long double sigma = det_b + det_bp - 2.0L * det_c;
  const long double det_v = det4(v);

  long double disc = sigma * sigma - 4.0L * det_v;
  if (disc < 0.0L) {
    if (disc < -1e-9L * std::max(sigma * sigma, 1.0L)) {
      throw NumericalError("sigma^2 - 4 det V is negative (" +
                           std::to_string(static_cast<double>(disc)) + ")");
    }
    disc = 0.0L;
  }
  // eta^2 = (sigma - sqrt(disc)) / 2, written without the cancellation.
  const long double eta_sq = 2.0L * det_v / (sigma + std::sqrt(disc));

  EntanglementReport rep;
  rep.sigma = static_cast<double>(sigma);
  rep.det_v = static_cast<double>(det_v);
  rep.eta_minus = static_cast<double>(std::sqrt(eta_sq));
  if (!(rep.eta_minus > 0.0)) throw NumericalError("non-positive partial-transpose eigenvalue");
  rep.log_negativity = std::max(0.0, -std::log(2.0 * rep.eta_minus));
  return rep;
}

double purity(const Mat4& v) {
  const long double det_v = det4(v);
  if (!(det_v > 0.0L)) throw DomainError("purity needs det V > 0");
  return static_cast<double>(1.0L / (4.0L * std::sqrt(det_v)));
}

Occupations effective_occupations(const Mat4& v, double r) {
  const Mat4 vt = apply_symplectic_squeeze(v, r, SqueezeDirection::Inverse);
  return {0.5 * (vt(0, 0) + vt(1, 1) - 1.0), 0.5 * (vt(2, 2) + vt(3, 3) - 1.0)};
}

double teleportation_fidelity(double n1, double n2, double r) {
  return 1.0 / (std::exp(-2.0 * r) * (1.0 + n1 + n2 + std::exp(2.0 * r)));
}

double teleportation_fidelity(const Mat4& v, double r) {
  const auto n = effective_occupations(v, r);
  return teleportation_fidelity(n.n1, n.n2, r);
}

StateQuality state_quality(const Mat4& v, double r) {
  StateQuality q;
  q.mu = purity(v);
  const auto n = effective_occupations(v, r);
  q.n_eff1 = n.n1;
  q.n_eff2 = n.n2;
  q.fidelity = teleportation_fidelity(n.n1, n.n2, r);
  return q;
}

}  // namespace optomech
