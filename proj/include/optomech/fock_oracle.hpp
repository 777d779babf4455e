#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "optomech/gaussian.hpp"

namespace optomech {

// Brute-force steady state of the shifted master equation in a truncated Fock
// basis. Used to referee the Gaussian pipeline on small instances.

struct HilbertSpec {
  int cutoff_a = 6;
  int cutoff_1 = 6;
  int cutoff_2 = 6;
  std::size_t max_dimension = 512;

  std::size_t dimension() const;
};

using SparseSuperop = Eigen::SparseMatrix<std::complex<double>>;

/// Column-stacked Liouvillian (vec(A rho B) = (B^T kron A) vec(rho)) of the
/// linearised model. Basis index = n_a * (c1 c2) + n_1 * c2 + n_2.
/// Throws CapacityError when the dimension exceeds spec.max_dimension, and
/// DomainError for a cutoff below 2.
SparseSuperop build_liouvillian(const LinearizedModel& m, const HilbertSpec& spec);
SparseSuperop build_liouvillian(const PhysicalConfig& cfg, const MeanFieldSolution& mf,
                                const HilbertSpec& spec);

struct DensityResult {
  Eigen::MatrixXcd rho;
  double residual = 0.0;  // max |L vec(rho)|
};

/// Null vector of L normalised to unit trace, by a sparse LU solve with one
/// equation replaced by the trace condition. Throws OracleDivergenceError when
/// the residual exceeds 1e-9.
DensityResult steady_state_density(const SparseSuperop& liouvillian, std::size_t dim);

struct OracleResult {
  Mat6 second_moments;
  Vec6 mean_vector;
  double tail = 0.0;  // max over modes of the population in the top two levels
  double solver_residual = 0.0;
};

OracleResult second_moments(const Eigen::MatrixXcd& rho, const HilbertSpec& spec);

/// build_liouvillian + steady_state_density + second_moments.
OracleResult run_oracle(const LinearizedModel& m, const HilbertSpec& spec);

}  // namespace optomech
