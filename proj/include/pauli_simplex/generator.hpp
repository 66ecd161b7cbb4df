#pragma once

// Decay rates of the time-local generator
//   L(rho) = sum_k gamma_k (sigma_k rho sigma_k - rho)
// for two- and three-way mixtures of QDS Pauli channels.

#include <optional>

#include "pauli_simplex/channels.hpp"

namespace pauli_simplex {

enum class RateConvention {
  Reduced,   // common positive factor pdot/2 dropped; dimensionless
  Physical,  // 1/time, requires the decay constant r
};

struct DecayRates {
  double gx = 0.0;
  double gy = 0.0;
  double gz = 0.0;
  RateConvention convention = RateConvention::Reduced;

  double operator[](Axis axis) const;
  double min() const;
  int negative_count(double tol = 0.0) const;
};

/// f(alpha, p) = (1 - alpha) / (1 - 2 (1 - alpha) p), i.e. -1/2 d ln(lambda)/dp
/// for an axis carrying weight alpha.
double f_factor(double alpha, double p);

/// pdot/2 = r (1 - 2p) / 4: the factor between reduced and physical rates.
double physical_prefactor(double r, double p);

/// gamma_j = f(w_k) + f(w_l) - f(w_j) for {j, k, l} = {X, Y, Z} (reduced).
/// Physical rates need r; throws std::invalid_argument if it is missing.
DecayRates three_mix_rates(const MixtureWeights& w, double p,
                           RateConvention convention = RateConvention::Reduced,
                           std::optional<double> r = std::nullopt);

/// gamma_X of a E_z + (1-a) E_y:
///   -(1-a) a (1-p) p / ((1-2p)(1-2(1-a)p)(1-2ap)) * pdot.
/// Negative for every a in (0,1), p in (0,1/2).
double two_mix_rate_x(double a, double p, double pdot);

/// Physical rates from finite differences of ln(lambda_i) in p, using
/// gamma_i + gamma_j = -1/2 d ln(lambda_k)/dt and the chain rule through pdot.
/// Central differences; second-order one-sided when p - h < 0.
DecayRates rates_fd_oracle(const MixtureWeights& w, double p, double r = 1.0, double h = 1e-6);

}  // namespace pauli_simplex
