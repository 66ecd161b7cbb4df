#pragma once

// Intermediate maps of the two-way mixture E(p) = a E_z^p + (1-a) E_y^p and
// their Choi (dynamical) matrices. The intermediate map V(q, p) is defined by
// E(q) = V(q, p) E(p); it is again a Pauli map with eigenvalue ratios x_i.

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "pauli_simplex/channels.hpp"
#include "pauli_simplex/divisibility.hpp"

namespace pauli_simplex {

using Matrix4c = Eigen::Matrix4cd;

struct IntermediateRatios {
  double x1 = 1.0;
  double x2 = 1.0;
  double x3 = 1.0;
};

/// x_i = lambda_i(q) / lambda_i(p) for the two-way mixture with weight a on E_z.
/// Requires 0 <= p <= q < 1/2.
IntermediateRatios intermediate_ratios(double a, double q, double p);

class ChoiMatrix {
 public:
  explicit ChoiMatrix(const Matrix4c& m, std::optional<IntermediateRatios> ratios = std::nullopt)
      : m_(m), ratios_(ratios) {}

  const Matrix4c& matrix() const { return m_; }
  const std::optional<IntermediateRatios>& ratios() const { return ratios_; }

  /// Numerical spectrum of the Hermitian part, ascending.
  std::array<double, 4> eigenvalues() const;
  double min_eigenvalue() const { return eigenvalues()[0]; }
  Complex trace() const { return m_.trace(); }

 private:
  Matrix4c m_;
  std::optional<IntermediateRatios> ratios_;
};

/// 1/2 [[1+x3, 0, 0, x1+x2], [0, 1-x3, x1-x2, 0], [0, x1-x2, 1-x3, 0], [x1+x2, 0, 0, 1+x3]]
ChoiMatrix choi_matrix(const IntermediateRatios& x);

/// {(1+x3 -+ (x1+x2))/2, (1-x3 -+ (x1-x2))/2}, ascending.
std::array<double, 4> closed_form_spectrum(const IntermediateRatios& x);

/// |1 + x3| >= |x1 + x2| and |1 - x3| >= |x1 - x2|, each up to tol.
bool cp_condition(const IntermediateRatios& x, double tol = 1e-12);

/// Minimum eigenvalue >= -tol.
bool is_cp(const ChoiMatrix& choi, double tol = 1e-12);

struct WitnessReport {
  IntermediateRatios ratios;
  std::array<double, 4> spectrum{};
  double min_eigenvalue = 0.0;
  Verdict verdict = Verdict::Markovian;
};

/// A negative Choi eigenvalue (below -tol) of the intermediate map witnesses
/// CP indivisibility.
WitnessReport rhp_witness(double a, double q, double p, double tol = 1e-12);

/// Most negative intermediate-map eigenvalue over q in (p, 1/2) at fixed p,
/// sampled on `steps` points approaching 1/2.
double rhp_sweep_min(double a, double p, int steps = 200);

/// Superoperator of the two-way mixture on row-major vec(rho), built from the
/// 2x2 channel action on the operator basis |k><l|.
Matrix4c a_matrix(double a, double p);

/// Realignment B[2k+i, 2l+j] = A[2i+j, 2k+l], taking a row-major
/// superoperator to its Choi matrix sum_kl |k><l| (x) E(|k><l|).
Matrix4c reshuffle(const Matrix4c& a);

/// Choi matrix of A(q) A(p)^{-1} by explicit inversion and reshuffling;
/// independent of the eigenvalue-ratio shortcut.
ChoiMatrix a_matrix_oracle(double a, double q, double p);

}  // namespace pauli_simplex
