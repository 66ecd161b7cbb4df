#include "pauli_simplex/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pauli_simplex {

double DecayRates::operator[](Axis axis) const {
  switch (axis) {
    case Axis::X: return gx;
    case Axis::Y: return gy;
    case Axis::Z: return gz;
  }
  return 0.0;
}

double DecayRates::min() const { return std::min({gx, gy, gz}); }

int DecayRates::negative_count(double tol) const {
  return int(gx < -tol) + int(gy < -tol) + int(gz < -tol);
}

double f_factor(double alpha, double p) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  require_open_p(p);
  const double q = 1.0 - alpha;
  return q / (1.0 - 2.0 * q * p);
}

double physical_prefactor(double r, double p) {
  if (!std::isfinite(r) || r <= 0.0) throw std::invalid_argument("decay constant r must be finite and > 0");
  require_open_p(p);
  return 0.5 * semigroup_pdot(r, p);
}

DecayRates three_mix_rates(const MixtureWeights& w, double p, RateConvention convention,
                           std::optional<double> r) {
  const double fa = f_factor(w.a(), p);
  const double fb = f_factor(w.b(), p);
  const double fc = f_factor(w.c(), p);
  DecayRates rates{fb + fc - fa, fa + fc - fb, fa + fb - fc, RateConvention::Reduced};
  if (convention == RateConvention::Physical) {
    if (!r) throw std::invalid_argument("physical rates require the decay constant r");
    const double k = physical_prefactor(*r, p);
    rates = {k * rates.gx, k * rates.gy, k * rates.gz, RateConvention::Physical};
  }
  return rates;
}

double two_mix_rate_x(double a, double p, double pdot) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("a must lie in [0, 1]");
  require_open_p(p);
  if (!(pdot > 0.0) || !std::isfinite(pdot)) throw std::invalid_argument("pdot must be finite and > 0");
  const double num = (1.0 - a) * a * (1.0 - p) * p;
  const double den = (1.0 - 2.0 * p) * (1.0 - 2.0 * (1.0 - a) * p) * (1.0 - 2.0 * a * p);
  return -(num / den) * pdot;
}

DecayRates rates_fd_oracle(const MixtureWeights& w, double p, double r, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("step h must be finite and > 0");
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("decay constant r must be finite and > 0");
  require_open_p(p);
  const bool central = p - h >= 0.0;
  if (!(p + (central ? h : 2.0 * h) < 0.5)) {
    throw std::invalid_argument("finite-difference step straddles p = 1/2");
  }

  auto log_lambda = [&](double q) {
    const PauliEigenvalues l = three_mix_eigenvalues(w, q);
    return std::array<double, 3>{std::log(l.lx), std::log(l.ly), std::log(l.lz)};
  };

  // d ln(lambda_i) / dp
  std::array<double, 3> d{};
  if (central) {
    const auto up = log_lambda(p + h);
    const auto dn = log_lambda(p - h);
    for (int i = 0; i < 3; ++i) d[i] = (up[i] - dn[i]) / (2.0 * h);
  } else {
    const auto f0 = log_lambda(p);
    const auto f1 = log_lambda(p + h);
    const auto f2 = log_lambda(p + 2.0 * h);
    for (int i = 0; i < 3; ++i) d[i] = (-3.0 * f0[i] + 4.0 * f1[i] - f2[i]) / (2.0 * h);
  }

  const double pdot = semigroup_pdot(r, p);
  // S_k = gamma_i + gamma_j = -1/2 d ln(lambda_k)/dt
  std::array<double, 3> s{};
  for (int k = 0; k < 3; ++k) s[k] = -0.5 * d[k] * pdot;
  return {0.5 * (s[1] + s[2] - s[0]), 0.5 * (s[0] + s[2] - s[1]), 0.5 * (s[0] + s[1] - s[2]),
          RateConvention::Physical};
}

}  // namespace pauli_simplex
