#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pauli_simplex/channels.hpp"

using namespace pauli_simplex;

namespace {

double max_dev(const Matrix2c& x, const Matrix2c& y) { return (x - y).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("semigroup_p closed form") {
  const SemigroupParam s0 = semigroup_p(1.0, 0.0);
  CHECK(s0.p() == 0.0);
  CHECK(s0.pdot() == doctest::Approx(0.5));

  CHECK(semigroup_p(1.0, 60.0).p() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(semigroup_p(1.0, 20.0).p() < 0.5);

  // (1 - e^-1)/2
  const SemigroupParam s = semigroup_p(2.0, 0.5);
  CHECK(s.p() == doctest::Approx(0.31606027941427883).epsilon(1e-15));
  CHECK(s.pdot() == doctest::Approx(2.0 * (1.0 - 2.0 * s.p()) / 2.0));

  double prev = -1.0;
  for (int k = 0; k < 50; ++k) {
    const double p = semigroup_p(0.7, 0.1 * k).p();
    CHECK(p > prev);
    prev = p;
  }

  CHECK_THROWS_AS(semigroup_p(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(semigroup_p(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(semigroup_p(1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(semigroup_p(NAN, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(semigroup_p(1.0, INFINITY), std::invalid_argument);
}

TEST_CASE("density matrix validation") {
  const DensityMatrix rho = DensityMatrix::from_bloch({0.3, -0.4, 0.5});
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
  CHECK(rho.bloch().a1 == doctest::Approx(0.3));
  CHECK(rho.bloch().a2 == doctest::Approx(-0.4));
  CHECK(rho.bloch().a3 == doctest::Approx(0.5));
  CHECK_THROWS_AS(DensityMatrix::from_bloch({1.0, 0.5, 0.0}), std::invalid_argument);

  Matrix2c bad = Matrix2c::Identity();
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), std::invalid_argument);  // trace 2
  bad << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), std::invalid_argument);  // negative
  bad << 0.5, 1, 0, 0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), std::invalid_argument);  // not Hermitian
}

TEST_CASE("apply_pauli_channel") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix rho = oracle::random_state(rng);
    for (Axis axis : kAxes) {
      CHECK(max_dev(apply_pauli_channel(rho, axis, 0.0).matrix(), rho.matrix()) == 0.0);
      const DensityMatrix out = apply_pauli_channel(rho, axis, 0.37);
      CHECK(out.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(max_dev(out.matrix(), out.matrix().adjoint()) == 0.0);
    }
  }

  const DensityMatrix plus_x = DensityMatrix::from_bloch({1.0, 0.0, 0.0});
  const BlochVector dephased = apply_pauli_channel(plus_x, Axis::Z, 0.5).bloch();
  CHECK(std::abs(dephased.a1) < 1e-15);
  CHECK(std::abs(dephased.a2) < 1e-15);
  CHECK(std::abs(dephased.a3) < 1e-15);

  const DensityMatrix mixed = DensityMatrix::maximally_mixed();
  for (Axis axis : kAxes) {
    for (double p : {0.0, 0.1, 0.3, 0.5}) {
      CHECK(max_dev(apply_pauli_channel(mixed, axis, p).matrix(), mixed.matrix()) < 1e-16);
    }
  }

  CHECK_THROWS_AS(apply_pauli_channel(mixed, Axis::X, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(apply_pauli_channel(mixed, Axis::X, 0.51), std::invalid_argument);
}

TEST_CASE("mixture weights") {
  const MixtureWeights w(0.2, 0.3, 0.5);
  CHECK(w.a() == 0.2);
  CHECK(w[Axis::Z] == 0.5);

  // renormalizes within 1e-12, rejects beyond
  const MixtureWeights off(0.2, 0.3, 0.5 + 5e-13);
  CHECK((off.a() + off.b() + off.c()) == doctest::Approx(1.0).epsilon(1e-16));
  CHECK_THROWS_AS(MixtureWeights(0.2, 0.3, 0.5 + 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(MixtureWeights(0.2, 0.3, 0.5 + 5e-13, WeightPolicy::Strict), std::invalid_argument);
  CHECK_NOTHROW(MixtureWeights(0.2, 0.3, 0.5, WeightPolicy::Strict));
  CHECK_THROWS_AS(MixtureWeights(-0.1, 0.6, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MixtureWeights(NAN, 0.5, 0.5), std::invalid_argument);
  CHECK(MixtureWeights(-1e-14, 0.5, 0.5 + 1e-14).a() == 0.0);

  const MixtureWeights l = MixtureWeights::lattice(1, 2, 4);
  CHECK(l.a() == 0.25);
  CHECK(l.b() == 0.5);
  CHECK(l.c() == 0.25);
  CHECK_THROWS_AS(MixtureWeights::lattice(3, 2, 4), std::invalid_argument);
}

TEST_CASE("three_mix_eigenvalues examples") {
  const PauliEigenvalues id = three_mix_eigenvalues(MixtureWeights(0.2, 0.3, 0.5), 0.0);
  CHECK(id.lx == 1.0);
  CHECK(id.ly == 1.0);
  CHECK(id.lz == 1.0);

  for (double p : {0.05, 0.2, 0.49}) {
    const PauliEigenvalues x = three_mix_eigenvalues(MixtureWeights::vertex(Axis::X), p);
    CHECK(x.lx == 1.0);
    CHECK(x.ly == doctest::Approx(1.0 - 2.0 * p));
    CHECK(x.lz == doctest::Approx(1.0 - 2.0 * p));
  }

  const PauliEigenvalues c = three_mix_eigenvalues(MixtureWeights::centroid(), 0.25);
  CHECK(c.lx == doctest::Approx(2.0 / 3.0));
  CHECK(c.ly == doctest::Approx(2.0 / 3.0));
  CHECK(c.lz == doctest::Approx(2.0 / 3.0));

  CHECK_THROWS_AS(three_mix_eigenvalues(MixtureWeights::centroid(), 0.5), std::invalid_argument);
}

TEST_CASE("two_mix_eigenvalues examples") {
  const double p = 0.3;
  PauliEigenvalues z = two_mix_eigenvalues(1.0, p);
  CHECK(z.lx == doctest::Approx(1.0 - 2.0 * p));
  CHECK(z.ly == doctest::Approx(1.0 - 2.0 * p));
  CHECK(z.lz == 1.0);
  PauliEigenvalues y = two_mix_eigenvalues(0.0, p);
  CHECK(y.lx == doctest::Approx(1.0 - 2.0 * p));
  CHECK(y.ly == 1.0);
  CHECK(y.lz == doctest::Approx(1.0 - 2.0 * p));

  const PauliEigenvalues e = two_mix_eigenvalues(0.4, 0.4);
  CHECK(e.lx == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(e.ly == doctest::Approx(0.68).epsilon(1e-14));
  CHECK(e.lz == doctest::Approx(0.52).epsilon(1e-14));

  for (double a : {0.0, 0.25, 0.7, 1.0}) {
    const PauliEigenvalues two = two_mix_eigenvalues(a, 0.17);
    const PauliEigenvalues three = three_mix_eigenvalues(MixtureWeights(0.0, 1.0 - a, a), 0.17);
    CHECK(two.lx == doctest::Approx(three.lx));
    CHECK(two.ly == doctest::Approx(three.ly));
    CHECK(two.lz == doctest::Approx(three.lz));
  }
  CHECK_THROWS_AS(two_mix_eigenvalues(1.1, 0.1), std::invalid_argument);
}

TEST_CASE("mixture eigenvalues reproduce the convex sum of channel actions") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const MixtureWeights w = oracle::sorted_uniform_simplex(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.4999)(rng);
    const PauliEigenvalues lambda = three_mix_eigenvalues(w, p);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const DensityMatrix rho = oracle::random_state(rng);
      const Matrix2c mixed = w.a() * apply_pauli_channel(rho, Axis::X, p).matrix() +
                             w.b() * apply_pauli_channel(rho, Axis::Y, p).matrix() +
                             w.c() * apply_pauli_channel(rho, Axis::Z, p).matrix();
      worst = std::max(worst, max_dev(apply_pauli_map(rho, lambda).matrix(), mixed));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("eigenvalues: permutation equivariance and monotonicity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MixtureWeights w = oracle::sorted_uniform_simplex(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.49)(rng);
    const PauliEigenvalues l = three_mix_eigenvalues(w, p);
    const std::array<double, 3> lv{l.lx, l.ly, l.lz};
    for (const auto& perm : oracle::all_permutations()) {
      const PauliEigenvalues lp = three_mix_eigenvalues(oracle::permute(w, perm), p);
      const std::array<double, 3> lpv{lp.lx, lp.ly, lp.lz};
      for (int k = 0; k < 3; ++k) CHECK(lpv[perm[k]] == lv[k]);
    }
    const PauliEigenvalues later = three_mix_eigenvalues(w, p + 0.005);
    if (w.a() < 1.0) CHECK(later.lx < l.lx);
    if (w.b() < 1.0) CHECK(later.ly < l.ly);
    if (w.c() < 1.0) CHECK(later.lz < l.lz);
    CHECK(l.lx > 0.0);
    CHECK(l.lx <= 1.0);
  }
}
