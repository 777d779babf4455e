#include "optomech/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <Eigen/IterativeLinearSolvers>
#include <unsupported/Eigen/IterativeSolvers>
#include <unsupported/Eigen/KroneckerProduct>

#include "optomech/errors.hpp"
#include "optomech/meanfield.hpp"

namespace optomech {

namespace {

using cplx = std::complex<double>;
using SpMat = Eigen::SparseMatrix<cplx>;

SpMat annihilation(int cutoff) {
  SpMat a(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a.insert(n - 1, n) = std::sqrt(static_cast<double>(n));
  a.makeCompressed();
  return a;
}

SpMat identity(Eigen::Index n) {
  SpMat i(n, n);
  i.setIdentity();
  return i;
}

SpMat kron3(const SpMat& x, const SpMat& y, const SpMat& z) {
  const SpMat xy = Eigen::kroneckerProduct(x, y);
  return Eigen::kroneckerProduct(xy, z);
}

SpMat adjoint(const SpMat& m) { return SpMat(m.adjoint()); }

// rate * (conj(o) kron o - 1/2 I kron o^dag o - 1/2 (o^dag o)^T kron I)
SpMat dissipator(const SpMat& o, double rate) {
  const auto n = o.rows();
  const SpMat id = identity(n);
  const SpMat ono = adjoint(o) * o;
  const SpMat jump = Eigen::kroneckerProduct(SpMat(o.conjugate()), o);
  const SpMat left = Eigen::kroneckerProduct(id, ono);
  const SpMat right = Eigen::kroneckerProduct(SpMat(ono.transpose()), id);
  return rate * (jump - 0.5 * left - 0.5 * right);
}

// Vec indices reachable from rho_00 through the sparsity pattern of L. The
// steady state is supported on this invariant block.
std::vector<Eigen::Index> populated_block(const SpMat& l) {
  const SpMat lt = l.transpose();
  std::vector<char> seen(static_cast<std::size_t>(l.rows()), 0);
  std::vector<Eigen::Index> order;
  std::queue<Eigen::Index> frontier;
  frontier.push(0);
  seen[0] = 1;
  while (!frontier.empty()) {
    const auto k = frontier.front();
    frontier.pop();
    order.push_back(k);
    for (const SpMat* m : {&l, &lt}) {
      for (SpMat::InnerIterator it(*m, k); it; ++it) {
        const auto j = it.row();
        if (!seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = 1;
          frontier.push(j);
        }
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

std::size_t HilbertSpec::dimension() const {
  return static_cast<std::size_t>(cutoff_a) * static_cast<std::size_t>(cutoff_1) *
         static_cast<std::size_t>(cutoff_2);
}

SparseSuperop build_liouvillian(const LinearizedModel& m, const HilbertSpec& spec) {
  if (spec.cutoff_a < 2 || spec.cutoff_1 < 2 || spec.cutoff_2 < 2) {
    throw DomainError("Fock cutoffs must be at least 2");
  }
  if (spec.dimension() > spec.max_dimension) {
    throw CapacityError("Hilbert dimension " + std::to_string(spec.dimension()) +
                        " exceeds the configured maximum " +
                        std::to_string(spec.max_dimension));
  }
  const SpMat ia = identity(spec.cutoff_a);
  const SpMat i1 = identity(spec.cutoff_1);
  const SpMat i2 = identity(spec.cutoff_2);
  const SpMat a = kron3(annihilation(spec.cutoff_a), i1, i2);
  const SpMat b1 = kron3(ia, annihilation(spec.cutoff_1), i2);
  const SpMat b2 = kron3(ia, i1, annihilation(spec.cutoff_2));
  const SpMat ad = adjoint(a), b1d = adjoint(b1), b2d = adjoint(b2);

  const SpMat xa = a + ad;
  const SpMat h = m.delta_a * SpMat(ad * a) + m.delta1 * SpMat(b1d * b1) +
                  m.delta2 * SpMat(b2d * b2) -
                  SpMat(xa * SpMat(m.coupling1 * SpMat(b1 + b1d) + m.coupling2 * SpMat(b2 + b2d))) +
                  m.lambda0 * SpMat(SpMat(b1d * b2d) + SpMat(b1 * b2));

  const auto n = h.rows();
  const SpMat id = identity(n);
  const cplx minus_i(0.0, -1.0);
  SpMat l = minus_i * SpMat(SpMat(Eigen::kroneckerProduct(id, h)) -
                            SpMat(Eigen::kroneckerProduct(SpMat(h.transpose()), id)));
  l += dissipator(a, m.kappa);
  if (m.gamma1 > 0.0) {
    l += dissipator(b1, m.gamma1 * (m.nth1 + 1.0));
    if (m.nth1 > 0.0) l += dissipator(b1d, m.gamma1 * m.nth1);
  }
  if (m.gamma2 > 0.0) {
    l += dissipator(b2, m.gamma2 * (m.nth2 + 1.0));
    if (m.nth2 > 0.0) l += dissipator(b2d, m.gamma2 * m.nth2);
  }
  l.prune(cplx(0.0, 0.0));
  l.makeCompressed();
  return l;
}

SparseSuperop build_liouvillian(const PhysicalConfig& cfg, const MeanFieldSolution& mf,
                                const HilbertSpec& spec) {
  return build_liouvillian(linearized_model(cfg, mf), spec);
}

DensityResult steady_state_density(const SparseSuperop& liouvillian, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  if (liouvillian.rows() != n * n || liouvillian.cols() != n * n) {
    throw DomainError("Liouvillian size does not match the Hilbert dimension");
  }

  const auto block = populated_block(liouvillian);
  const auto m = static_cast<Eigen::Index>(block.size());
  std::vector<Eigen::Index> local(static_cast<std::size_t>(n * n), -1);
  for (Eigen::Index k = 0; k < m; ++k) local[static_cast<std::size_t>(block[static_cast<std::size_t>(k)])] = k;

  // Row 0 (the equation for rho_00) is redundant given trace preservation and
  // is replaced by tr(rho) = 1.
  std::vector<Eigen::Triplet<cplx>> triplets;
  triplets.reserve(static_cast<std::size_t>(liouvillian.nonZeros()));
  for (Eigen::Index col = 0; col < liouvillian.outerSize(); ++col) {
    const auto lc = local[static_cast<std::size_t>(col)];
    if (lc < 0) continue;
    for (SparseSuperop::InnerIterator it(liouvillian, col); it; ++it) {
      const auto lr = local[static_cast<std::size_t>(it.row())];
      if (lr > 0) triplets.emplace_back(lr, lc, it.value());
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    triplets.emplace_back(0, local[static_cast<std::size_t>(i * n + i)], cplx(1.0, 0.0));
  }
  SpMat system(m, m);
  system.setFromTriplets(triplets.begin(), triplets.end());
  system.makeCompressed();

  // Direct LU fills in badly (the coupling graph is a 6-d lattice), so the
  // system is solved by ILUT-preconditioned GMRES.
  Eigen::GMRES<SpMat, Eigen::IncompleteLUT<cplx>> solver;
  solver.preconditioner().setDroptol(1e-3);
  solver.preconditioner().setFillfactor(4);
  solver.set_restart(200);
  solver.setTolerance(1e-14);
  solver.setMaxIterations(4000);
  solver.compute(system);
  if (solver.info() != Eigen::Success) {
    throw OracleDivergenceError("preconditioner construction failed",
                                std::numeric_limits<double>::infinity());
  }
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(m);
  rhs(0) = 1.0;
  const Eigen::VectorXcd x = solver.solve(rhs);

  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(n * n);
  for (Eigen::Index k = 0; k < m; ++k) full(block[static_cast<std::size_t>(k)]) = x(k);

  DensityResult out;
  out.rho = Eigen::Map<const Eigen::MatrixXcd>(full.data(), n, n);
  out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
  Eigen::Map<const Eigen::VectorXcd> vec(out.rho.data(), n * n);
  out.residual = (liouvillian * vec).cwiseAbs().maxCoeff();
  if (!(out.residual <= 1e-9)) {
    throw OracleDivergenceError("steady-state residual " + std::to_string(out.residual) +
                                    " exceeds 1e-9",
                                out.residual);
  }
  return out;
}

OracleResult second_moments(const Eigen::MatrixXcd& rho, const HilbertSpec& spec) {
  const int cuts[3] = {spec.cutoff_a, spec.cutoff_1, spec.cutoff_2};
  const SpMat ia = identity(cuts[0]), i1 = identity(cuts[1]), i2 = identity(cuts[2]);
  const SpMat ops[3] = {kron3(annihilation(cuts[0]), i1, i2),
                        kron3(ia, annihilation(cuts[1]), i2),
                        kron3(ia, i1, annihilation(cuts[2]))};

  // Quadrature operators in the global ordering (x_a, p_a, x_1, p_1, x_2, p_2).
  const double root_half = std::sqrt(0.5);
  std::vector<Eigen::MatrixXcd> q;
  for (const auto& a : ops) {
    const Eigen::MatrixXcd ad = Eigen::MatrixXcd(a.adjoint());
    const Eigen::MatrixXcd ae = Eigen::MatrixXcd(a);
    q.push_back(root_half * (ae + ad));
    q.push_back(cplx(0.0, -root_half) * (ae - ad));
  }

  OracleResult res;
  for (int j = 0; j < 6; ++j) res.mean_vector(j) = (rho * q[static_cast<std::size_t>(j)]).trace().real();
  for (int j = 0; j < 6; ++j) {
    const Eigen::MatrixXcd rq = rho * q[static_cast<std::size_t>(j)];
    for (int k = j; k < 6; ++k) {
      // 1/2 <{xi_j, xi_k}> = Re tr(rho xi_j xi_k) for Hermitian xi.
      const double sym = (rq * q[static_cast<std::size_t>(k)]).trace().real();
      res.second_moments(j, k) = res.second_moments(k, j) =
          sym - res.mean_vector(j) * res.mean_vector(k);
    }
  }

  // Marginal populations per mode.
  const Eigen::Index dim = rho.rows();
  const int strides[3] = {cuts[1] * cuts[2], cuts[2], 1};
  for (int mode = 0; mode < 3; ++mode) {
    double top = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      const int level = static_cast<int>(i / strides[mode]) % cuts[mode];
      if (level >= cuts[mode] - 2) top += rho(i, i).real();
    }
    res.tail = std::max(res.tail, top);
  }
  return res;
}

OracleResult run_oracle(const LinearizedModel& m, const HilbertSpec& spec) {
  const auto l = build_liouvillian(m, spec);
  const auto dens = steady_state_density(l, spec.dimension());
  auto res = second_moments(dens.rho, spec);
  res.solver_residual = dens.residual;
  return res;
}

}  // namespace optomech
