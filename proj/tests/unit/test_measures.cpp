#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "optomech/errors.hpp"
#include "optomech/measures.hpp"
#include "optomech/pipeline.hpp"

using namespace optomech;

namespace {

// Partial transpose flips p2; its smallest symplectic eigenvalue is eta^-.
double eta_minus_by_eigen(const Mat4& v) {
  const Mat4 p = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
  return symplectic_eigenvalues(p * v * p)(0);
}

}  // namespace

TEST_CASE("vacuum") {
  const Mat4 v = 0.5 * Mat4::Identity();
  const auto rep = logarithmic_negativity(v);
  CHECK(rep.eta_minus == doctest::Approx(0.5));
  CHECK(rep.log_negativity == 0.0);
  CHECK(purity(v) == doctest::Approx(1.0));
}

TEST_CASE("two-mode squeezed vacuum has E_N = 2r") {
  for (int i = 0; i < 50; ++i) {
    const double r = 3.0 * i / 49.0;
    const auto rep = logarithmic_negativity(two_mode_squeezed_thermal(0.0, 0.0, r));
    CHECK(std::abs(rep.log_negativity - 2.0 * r) < 1e-8);
  }
  const double r = 0.5 * std::log(11.0);
  CHECK(logarithmic_negativity(two_mode_squeezed_thermal(0, 0, r)).log_negativity ==
        doctest::Approx(2.398).epsilon(1e-3));
}

TEST_CASE("product thermal state is separable") {
  CHECK(logarithmic_negativity(1.5 * Mat4::Identity()).log_negativity == 0.0);
}

TEST_CASE("purity examples") {
  CHECK(purity(Mat4::Identity()) == doctest::Approx(0.25));
  for (double r : {0.1, 1.0, 2.5}) {
    CHECK(purity(two_mode_squeezed_thermal(0.0, 0.0, r)) == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(purity(Mat4::Zero()), DomainError);
}

TEST_CASE("purity identity on squeezed thermal states") {
  gen::Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const double n1 = rng.uniform(0.0, 5.0), n2 = rng.uniform(0.0, 5.0);
    const double r = rng.uniform(0.0, 3.0);
    const double mu = purity(two_mode_squeezed_thermal(n1, n2, r));
    CHECK(std::abs(mu - 1.0 / ((1 + 2 * n1) * (1 + 2 * n2))) < 1e-10);
  }
}

TEST_CASE("effective occupations undo the squeeze") {
  const double r = 0.9;
  const auto z = effective_occupations(two_mode_squeezed_thermal(0.0, 0.0, r), r);
  CHECK(std::abs(z.n1) < 1e-13);
  CHECK(std::abs(z.n2) < 1e-13);
  const auto o = effective_occupations(two_mode_squeezed_thermal(1.0, 2.0, r), r);
  CHECK(o.n1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(o.n2 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("fidelity examples") {
  CHECK(teleportation_fidelity(0.0, 0.0, 0.0) == doctest::Approx(0.5));
  const double r = 0.5 * std::log(11.0);
  CHECK(teleportation_fidelity(0.0, 0.0, r) == doctest::Approx(11.0 / 12.0).epsilon(1e-14));
  CHECK(teleportation_fidelity(1.0, 1.0, r) == doctest::Approx(11.0 / 14.0).epsilon(1e-14));
  CHECK(teleportation_fidelity(two_mode_squeezed_thermal(0.0, 0.0, r), r) ==
        doctest::Approx(11.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("fidelity decreases with either occupation") {
  gen::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const double r = rng.uniform(0.0, 3.0);
    const double n1 = rng.uniform(0.0, 10.0), n2 = rng.uniform(0.0, 10.0);
    const double dn = rng.uniform(1e-3, 1.0);
    const double f = teleportation_fidelity(n1, n2, r);
    CHECK(teleportation_fidelity(n1 + dn, n2, r) < f);
    CHECK(teleportation_fidelity(n1, n2 + dn, r) < f);
  }
}

TEST_CASE("E_N is invariant under local symplectic maps") {
  gen::Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    const Mat4 v = gen::random_physical_covariance(rng);
    const Mat4 l = gen::local(gen::random_local(rng), gen::random_local(rng));
    const double e0 = logarithmic_negativity(v).log_negativity;
    const double e1 = logarithmic_negativity(l * v * l.transpose()).log_negativity;
    CHECK(e1 == doctest::Approx(e0).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("block formula matches the partial-transpose spectrum") {
  gen::Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const Mat4 v = gen::random_physical_covariance(rng);
    const double eta = logarithmic_negativity(v).eta_minus;
    CHECK(eta == doctest::Approx(eta_minus_by_eigen(v)).epsilon(1e-9));
  }
}

TEST_CASE("unphysical input is rejected") {
  Mat4 v = 0.5 * Mat4::Identity();
  v(0, 0) = v(1, 1) = 0.2;
  CHECK_THROWS_AS(logarithmic_negativity(v), DomainError);
}

TEST_CASE("pipeline E_N never beats the ideal squeezed vacuum") {
  gen::Rng rng(31);
  PhysicalConfig cfg;
  PipelineOptions opt;
  opt.with_cooling = false;
  int evaluated = 0;
  for (int i = 0; i < 40; ++i) {
    cfg.delta_a = rng.uniform(3.0, 8.0);
    cfg.nth1 = cfg.nth2 = rng.uniform(0.0, 20.0);
    cfg.lambda0 = rng.uniform(20.0, 30.4);
    cfg.coupling_case = rng.uniform(0, 1) < 0.5 ? CouplingCase::One : CouplingCase::Two;
    opt.fixed_alpha_abs = rng.uniform(20.0, 300.0);
    const auto p = evaluate_point(cfg, opt);
    if (!p.ok()) continue;
    ++evaluated;
    CHECK(p.entanglement->log_negativity <= 2.0 * p.frame->r + 1e-9);
  }
  CHECK(evaluated > 20);
}
