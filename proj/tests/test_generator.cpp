#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pauli_simplex/generator.hpp"

using namespace pauli_simplex;

namespace {

double rel_error(const DecayRates& x, const DecayRates& y) {
  const double diff = std::max({std::abs(x.gx - y.gx), std::abs(x.gy - y.gy), std::abs(x.gz - y.gz)});
  const double scale = std::max({std::abs(y.gx), std::abs(y.gy), std::abs(y.gz)});
  return diff / scale;
}

}  // namespace

TEST_CASE("f_factor") {
  for (double p : {0.0, 0.2, 0.4999}) CHECK(f_factor(1.0, p) == 0.0);
  CHECK(f_factor(0.0, 0.3) == doctest::Approx(1.0 / 0.4));
  CHECK(f_factor(0.5, 0.25) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(f_factor(0.3, 0.0) == doctest::Approx(0.7));
  CHECK(f_factor(0.3, 0.2) < f_factor(0.3, 0.21));
  CHECK_THROWS_AS(f_factor(0.3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(f_factor(1.2, 0.1), std::invalid_argument);
}

TEST_CASE("three_mix_rates examples") {
  const DecayRates c = three_mix_rates(MixtureWeights::centroid(), 0.3);
  CHECK(c.gx == doctest::Approx(f_factor(1.0 / 3.0, 0.3)));
  CHECK(c.gy == c.gx);
  CHECK(c.gz == c.gx);

  const MixtureWeights w(0.2, 0.3, 0.5);
  const DecayRates at0 = three_mix_rates(w, 0.0);
  CHECK(at0.gx == doctest::Approx(0.4));
  CHECK(at0.gy == doctest::Approx(0.6));
  CHECK(at0.gz == doctest::Approx(1.0));

  // large b makes f(b) the small term: all three rates stay positive
  const DecayRates r = three_mix_rates(MixtureWeights(0.1, 0.8, 0.1), 0.45);
  CHECK(r.gx == doctest::Approx(0.24390243902439046).epsilon(1e-13));
  CHECK(r.gy == doctest::Approx(9.229781771501928).epsilon(1e-13));
  CHECK(r.gz == doctest::Approx(0.24390243902439046).epsilon(1e-13));

  // small b drives gamma_Y negative
  CHECK(three_mix_rates(MixtureWeights(0.45, 0.1, 0.45), 0.45).gy < 0.0);

  CHECK_THROWS_AS(three_mix_rates(w, 0.2, RateConvention::Physical), std::invalid_argument);
  const DecayRates phys = three_mix_rates(w, 0.2, RateConvention::Physical, 2.0);
  const DecayRates red = three_mix_rates(w, 0.2);
  CHECK(phys.convention == RateConvention::Physical);
  CHECK(phys.gx == doctest::Approx(red.gx * 2.0 * 0.6 / 4.0));
}

TEST_CASE("two_mix_rate_x") {
  for (double p : {0.0, 0.1, 0.45}) {
    CHECK(two_mix_rate_x(0.0, p, 1.3) == 0.0);
    CHECK(two_mix_rate_x(1.0, p, 1.3) == 0.0);
  }
  CHECK(two_mix_rate_x(0.3, 0.0, 1.0) == 0.0);
  CHECK(two_mix_rate_x(0.5, 0.25, 1.0) == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(two_mix_rate_x(0.5, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(two_mix_rate_x(0.5, 0.2, 0.0), std::invalid_argument);

  // Written form equals reduced gamma_X of weights (0, 1-a, a) times pdot/4.
  for (double a : {0.1, 0.5, 0.77}) {
    for (double p : {0.05, 0.25, 0.45}) {
      const double reduced = three_mix_rates(MixtureWeights(0.0, 1.0 - a, a), p).gx;
      CHECK(two_mix_rate_x(a, p, 0.9) == doctest::Approx(reduced * 0.9 / 4.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("rates_fd_oracle") {
  // pure E_x semigroup with r = 1: gamma = (1/2, 0, 0)
  const DecayRates pure = rates_fd_oracle(MixtureWeights::vertex(Axis::X), 0.1, 1.0, 1e-6);
  CHECK(std::abs(pure.gx - 0.5) < 1e-8);
  CHECK(std::abs(pure.gy) < 1e-8);
  CHECK(std::abs(pure.gz) < 1e-8);

  const MixtureWeights w(0.2, 0.3, 0.5);
  const DecayRates fd = rates_fd_oracle(w, 0.3, 1.0);
  const DecayRates exact = three_mix_rates(w, 0.3, RateConvention::Physical, 1.0);
  CHECK(rel_error(fd, exact) < 1e-6);

  const DecayRates c0 = rates_fd_oracle(MixtureWeights::centroid(), 0.0);
  CHECK(c0.gx > 0.0);
  CHECK(c0.gx == doctest::Approx(c0.gy).epsilon(1e-9));
  CHECK(c0.gx == doctest::Approx(c0.gz).epsilon(1e-9));
  CHECK(rel_error(c0, three_mix_rates(MixtureWeights::centroid(), 0.0, RateConvention::Physical, 1.0)) < 1e-6);

  CHECK_THROWS_AS(rates_fd_oracle(w, 0.4999995, 1.0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(rates_fd_oracle(w, 0.2, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("rates on a simplex grid: pairwise sums, one negative rate, p = 0 anchor") {
  const int n = 100;
  int checked = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      const MixtureWeights w = MixtureWeights::lattice(i, j, n);
      const DecayRates at0 = three_mix_rates(w, 0.0);
      REQUIRE(at0.gx == doctest::Approx(2.0 * w.a()));
      REQUIRE(at0.gy == doctest::Approx(2.0 * w.b()));
      REQUIRE(at0.gz == doctest::Approx(2.0 * w.c()));
      for (int k = 0; k < 50; ++k) {
        const double p = 0.4999 * double(k) / 49.0;
        const DecayRates g = three_mix_rates(w, p);
        const double fa = f_factor(w.a(), p), fb = f_factor(w.b(), p), fc = f_factor(w.c(), p);
        const double scale = 1e-12 * std::max(1.0, fa + fb + fc);
        REQUIRE(std::abs(g.gx + g.gy - 2.0 * fc) <= scale);
        REQUIRE(std::abs(g.gy + g.gz - 2.0 * fa) <= scale);
        REQUIRE(std::abs(g.gz + g.gx - 2.0 * fb) <= scale);
        REQUIRE(g.negative_count() <= 1);
        ++checked;
      }
    }
  }
  CHECK(checked == 5151 * 50);
}

TEST_CASE("two_mix_rate_x is negative on the open square") {
  for (int i = 1; i <= 99; ++i) {
    for (int k = 1; k <= 49; ++k) {
      REQUIRE(two_mix_rate_x(i / 100.0, k / 100.0, 1.0) < 0.0);
    }
  }
}

TEST_CASE("finite differences agree with analytic rates; sign patterns agree") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> up(0.0, 0.49);
  std::uniform_real_distribution<double> ur(0.1, 5.0);
  for (int k = 0; k < 300; ++k) {
    const MixtureWeights w = oracle::sorted_uniform_simplex(rng);
    const double p = up(rng);
    const double r = ur(rng);
    const DecayRates exact = three_mix_rates(w, p, RateConvention::Physical, r);
    CHECK(rel_error(rates_fd_oracle(w, p, r), exact) < 1e-5);
    const DecayRates red = three_mix_rates(w, p);
    for (Axis axis : kAxes) CHECK(std::signbit(red[axis]) == std::signbit(exact[axis]));
  }
}
