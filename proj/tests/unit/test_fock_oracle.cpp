#include <doctest.h>

#include <cmath>

#include "optomech/errors.hpp"
#include "optomech/fock_oracle.hpp"
#include "optomech/gaussian.hpp"

using namespace optomech;

namespace {

LinearizedModel small_instance() {
  LinearizedModel m;
  m.delta_a = 3.0;
  m.delta1 = 3.1;
  m.delta2 = 2.9;
  m.lambda0 = 0.5;
  m.coupling1 = 0.3;
  m.gamma1 = m.gamma2 = 0.05;
  return m;
}

LinearizedModel decoupled(double nth1) {
  LinearizedModel m;
  m.delta_a = 1.0;
  m.delta1 = 2.0;
  m.delta2 = 1.5;
  m.gamma1 = 0.1;
  m.gamma2 = 0.1;
  m.nth1 = nth1;
  return m;
}

void check_density_axioms(const Eigen::MatrixXcd& rho) {
  CHECK(std::abs(rho.trace() - 1.0) <= 1e-10);
  CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= 1e-10);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  CHECK(es.eigenvalues().minCoeff() >= -1e-9);
}

}  // namespace

TEST_CASE("vacuum is the steady state without couplings") {
  const HilbertSpec spec{3, 3, 3};
  const auto l = build_liouvillian(decoupled(0.0), spec);
  Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(l.cols());
  vac(0) = 1.0;
  CHECK((l * vac).cwiseAbs().maxCoeff() == 0.0);

  const auto d = steady_state_density(l, spec.dimension());
  CHECK(std::abs(d.rho(0, 0) - 1.0) < 1e-14);
  CHECK(d.rho.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-13));
  check_density_axioms(d.rho);

  const auto o = second_moments(d.rho, spec);
  CHECK((o.second_moments - 0.5 * Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(o.mean_vector.cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("thermal mechanical mode") {
  const double nbar = 0.2;
  const HilbertSpec spec{4, 12, 4};
  const auto d = steady_state_density(build_liouvillian(decoupled(nbar), spec), spec.dimension());
  check_density_axioms(d.rho);

  // Populations of mode 1 (stride 4 in the basis index) are geometric.
  const double q = nbar / (nbar + 1.0);
  for (int n = 0; n < 8; ++n) {
    const double p = d.rho(4 * n, 4 * n).real();
    CHECK(p == doctest::Approx((1.0 - q) * std::pow(q, n)).epsilon(1e-6));
  }
  const auto o = second_moments(d.rho, spec);
  CHECK(std::abs(o.second_moments(quad::x1, quad::x1) - 0.7) < 1e-6);
  CHECK(std::abs(o.second_moments(quad::p1, quad::p1) - 0.7) < 1e-6);
  double occupation = 0.0;
  for (int n = 0; n < 12; ++n) occupation += n * d.rho(4 * n, 4 * n).real();
  CHECK(std::abs(occupation - nbar) < 1e-6);
  CHECK(o.tail < 1e-6);
}

TEST_CASE("small coupled instance matches the Lyapunov covariance") {
  const auto m = small_instance();
  const HilbertSpec spec{6, 6, 6};
  const auto l = build_liouvillian(m, spec);
  const auto d = steady_state_density(l, spec.dimension());
  check_density_axioms(d.rho);
  CHECK(d.residual <= 1e-9);

  const auto o = second_moments(d.rho, spec);
  const auto lyap = solve_lyapunov_steady(build_drift_diffusion(m));
  REQUIRE(o.tail < 1e-6);
  CHECK((o.second_moments - lyap.covariance).cwiseAbs().maxCoeff() < 1e-3);
  CHECK(o.mean_vector.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("increasing the cutoffs by two barely moves the covariance") {
  const auto m = small_instance();
  const auto coarse = run_oracle(m, HilbertSpec{6, 6, 6});
  const auto fine = run_oracle(m, HilbertSpec{8, 8, 8});
  CHECK((fine.second_moments - coarse.second_moments).cwiseAbs().maxCoeff() < 1e-4);
  CHECK(fine.tail < coarse.tail);
}

TEST_CASE("oracle input errors") {
  const auto m = small_instance();
  CHECK_THROWS_AS(build_liouvillian(m, HilbertSpec{1, 4, 4}), DomainError);
  CHECK_THROWS_AS(build_liouvillian(m, HilbertSpec{10, 10, 10}), CapacityError);
  const auto l = build_liouvillian(m, HilbertSpec{2, 2, 2});
  CHECK_THROWS_AS(steady_state_density(l, 9), DomainError);
}
