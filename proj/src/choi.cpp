#include "pauli_simplex/choi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pauli_simplex {

namespace {

void require_forward(double a, double q, double p) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("a must lie in [0, 1]");
  require_open_p(p, "p");
  require_open_p(q, "q");
  if (q < p) throw std::invalid_argument("intermediate map needs q >= p");
}

}  // namespace

IntermediateRatios intermediate_ratios(double a, double q, double p) {
  require_forward(a, q, p);
  return {(1.0 - 2.0 * q) / (1.0 - 2.0 * p),
          (1.0 - 2.0 * a * q) / (1.0 - 2.0 * a * p),
          (2.0 * a * q - 2.0 * q + 1.0) / (2.0 * a * p - 2.0 * p + 1.0)};
}

std::array<double, 4> ChoiMatrix::eigenvalues() const {
  const Matrix4c h = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::Vector4d ev = solver.eigenvalues();
  return {ev[0], ev[1], ev[2], ev[3]};
}

ChoiMatrix choi_matrix(const IntermediateRatios& x) {
  if (!std::isfinite(x.x1) || !std::isfinite(x.x2) || !std::isfinite(x.x3)) {
    throw std::invalid_argument("intermediate ratios must be finite");
  }
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = m(3, 3) = 1.0 + x.x3;
  m(1, 1) = m(2, 2) = 1.0 - x.x3;
  m(0, 3) = m(3, 0) = x.x1 + x.x2;
  m(1, 2) = m(2, 1) = x.x1 - x.x2;
  return ChoiMatrix(0.5 * m, x);
}

std::array<double, 4> closed_form_spectrum(const IntermediateRatios& x) {
  std::array<double, 4> ev{0.5 * (1.0 + x.x3 - (x.x1 + x.x2)), 0.5 * (1.0 + x.x3 + (x.x1 + x.x2)),
                           0.5 * (1.0 - x.x3 - (x.x1 - x.x2)), 0.5 * (1.0 - x.x3 + (x.x1 - x.x2))};
  std::sort(ev.begin(), ev.end());
  return ev;
}

bool cp_condition(const IntermediateRatios& x, double tol) {
  // eigenvalues (1 +- x3 -+ |x1 +- x2|)/2, so tol on eigenvalues is 2 tol here
  return std::abs(1.0 + x.x3) >= std::abs(x.x1 + x.x2) - 2.0 * tol &&
         std::abs(1.0 - x.x3) >= std::abs(x.x1 - x.x2) - 2.0 * tol;
}

bool is_cp(const ChoiMatrix& choi, double tol) { return choi.min_eigenvalue() >= -tol; }

WitnessReport rhp_witness(double a, double q, double p, double tol) {
  WitnessReport rep;
  rep.ratios = intermediate_ratios(a, q, p);
  const ChoiMatrix choi = choi_matrix(rep.ratios);
  rep.spectrum = choi.eigenvalues();
  rep.min_eigenvalue = rep.spectrum[0];
  rep.verdict = rep.min_eigenvalue < -tol ? Verdict::NonMarkovian : Verdict::Markovian;
  return rep;
}

double rhp_sweep_min(double a, double p, int steps) {
  require_forward(a, p, p);
  if (steps < 1) throw std::invalid_argument("sweep needs at least one step");
  double lowest = 2.0;
  // q_k = 1/2 - (1/2 - p) * 10^(-12 k / steps), geometric approach to 1/2
  for (int k = 1; k <= steps; ++k) {
    const double gap = (0.5 - p) * std::pow(10.0, -12.0 * double(k) / double(steps));
    const double q = 0.5 - gap;
    if (!(q < 0.5) || q <= p) continue;
    lowest = std::min(lowest, closed_form_spectrum(intermediate_ratios(a, q, p))[0]);
  }
  return lowest;
}

Matrix4c a_matrix(double a, double p) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("a must lie in [0, 1]");
  require_open_p(p);
  Matrix4c A = Matrix4c::Zero();
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      Matrix2c basis = Matrix2c::Zero();
      basis(k, l) = 1.0;
      const Matrix2c out = a * pauli_channel_action(basis, Axis::Z, p) +
                           (1.0 - a) * pauli_channel_action(basis, Axis::Y, p);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) A(2 * i + j, 2 * k + l) = out(i, j);
      }
    }
  }
  return A;
}

Matrix4c reshuffle(const Matrix4c& a) {
  Matrix4c b;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) b(2 * k + i, 2 * l + j) = a(2 * i + j, 2 * k + l);
  return b;
}

ChoiMatrix a_matrix_oracle(double a, double q, double p) {
  require_forward(a, q, p);
  const Matrix4c Ap = a_matrix(a, p);
  const Eigen::FullPivLU<Matrix4c> lu(Ap);
  if (!lu.isInvertible()) throw std::domain_error("A(p) is singular");
  const Matrix4c intermediate = a_matrix(a, q) * lu.inverse();
  return ChoiMatrix(reshuffle(intermediate));
}

}  // namespace pauli_simplex
