#pragma once

#include "optomech/gaussian.hpp"

namespace optomech {

struct EntanglementReport {
  double log_negativity = 0.0;
  double eta_minus = 0.0;  // smallest partial-transpose symplectic eigenvalue
  double sigma = 0.0;      // det B + det B' - 2 det C
  double det_v = 0.0;
};

/// Logarithmic negativity of a two-mode covariance [[B, C], [C^T, B']].
/// Throws DomainError for unphysical input, NumericalError when
/// sigma^2 - 4 det V is negative beyond round-off.
EntanglementReport logarithmic_negativity(const Mat4& v);

/// mu = 1 / (4 sqrt(det V)). Throws DomainError when det V <= 0.
double purity(const Mat4& v);

struct Occupations {
  double n1 = 0.0;
  double n2 = 0.0;
};

/// Thermal occupations of the squeezed modes read off an original-basis
/// covariance: undo S(r), then n_j = (V'_xx + V'_pp - 1) / 2.
Occupations effective_occupations(const Mat4& v, double r);

/// F = 1 / (e^{-2r} (1 + n1 + n2 + e^{2r})).
double teleportation_fidelity(double n1, double n2, double r);
double teleportation_fidelity(const Mat4& v, double r);

struct StateQuality {
  double mu = 0.0;
  double n_eff1 = 0.0;
  double n_eff2 = 0.0;
  double fidelity = 0.0;
};
StateQuality state_quality(const Mat4& v, double r);

}  // namespace optomech
