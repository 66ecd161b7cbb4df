#include "pauli_simplex/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pauli_simplex {

namespace {

const Complex kI{0.0, 1.0};

bool finite(double v) { return std::isfinite(v); }

}  // namespace

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
  }
  return "?";
}

const Matrix2c& pauli(Axis axis) {
  static const Matrix2c sx = (Matrix2c() << 0, 1, 1, 0).finished();
  static const Matrix2c sy = (Matrix2c() << 0, -kI, kI, 0).finished();
  static const Matrix2c sz = (Matrix2c() << 1, 0, 0, -1).finished();
  switch (axis) {
    case Axis::X: return sx;
    case Axis::Y: return sy;
    case Axis::Z: return sz;
  }
  return sz;
}

double BlochVector::norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }

double BlochVector::operator[](Axis axis) const {
  switch (axis) {
    case Axis::X: return a1;
    case Axis::Y: return a2;
    case Axis::Z: return a3;
  }
  return 0.0;
}

DensityMatrix DensityMatrix::from_bloch(const BlochVector& bloch, double tol) {
  if (!finite(bloch.a1) || !finite(bloch.a2) || !finite(bloch.a3)) {
    throw std::invalid_argument("Bloch vector must be finite");
  }
  if (bloch.norm() > 1.0 + tol) {
    throw std::invalid_argument("Bloch vector norm exceeds 1");
  }
  Matrix2c m;
  m << 1.0 + bloch.a3, Complex(bloch.a1, -bloch.a2),
       Complex(bloch.a1, bloch.a2), 1.0 - bloch.a3;
  return DensityMatrix(0.5 * m);
}

DensityMatrix DensityMatrix::from_matrix(const Matrix2c& m, double tol) {
  if (!m.allFinite()) throw std::invalid_argument("density matrix must be finite");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0)) > tol) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Matrix2c> solver(m, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) {
    throw std::invalid_argument("density matrix must be positive semidefinite");
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(0.5 * Matrix2c::Identity()); }

BlochVector DensityMatrix::bloch() const {
  // a_i = tr(rho sigma_i)
  return {(m_ * pauli(Axis::X)).trace().real(),
          (m_ * pauli(Axis::Y)).trace().real(),
          (m_ * pauli(Axis::Z)).trace().real()};
}

SemigroupParam::SemigroupParam(double r, double t) : r_(r), t_(t) {
  if (!finite(r) || r <= 0.0) throw std::invalid_argument("decay constant r must be finite and > 0");
  if (!finite(t) || t < 0.0) throw std::invalid_argument("time t must be finite and >= 0");
  p_ = -0.5 * std::expm1(-r * t);
  pdot_ = semigroup_pdot(r, p_);
}

SemigroupParam semigroup_p(double r, double t) { return SemigroupParam(r, t); }

double semigroup_pdot(double r, double p) { return 0.5 * r * (1.0 - 2.0 * p); }

MixtureWeights::MixtureWeights(double a, double b, double c, WeightPolicy policy) : w_{a, b, c} {
  for (double& v : w_) {
    if (!finite(v)) throw std::invalid_argument("mixture weights must be finite");
    if (v < -kSumTol) throw std::invalid_argument("mixture weights must be >= 0");
    v = std::max(v, 0.0);
  }
  // Summing in sorted order keeps the result invariant under relabeling.
  std::array<double, 3> sorted = w_;
  std::sort(sorted.begin(), sorted.end());
  const double sum = (sorted[0] + sorted[1]) + sorted[2];
  const double dev = std::abs(sum - 1.0);
  if (dev > kSumTol) {
    throw std::invalid_argument("mixture weights must sum to 1 (got " + std::to_string(sum) + ")");
  }
  if (policy == WeightPolicy::Strict) {
    if (dev > 4.0 * std::numeric_limits<double>::epsilon()) {
      throw std::invalid_argument("mixture weights must sum to 1 exactly in strict mode");
    }
    return;
  }
  if (sum != 1.0) {
    for (double& v : w_) v /= sum;
  }
}

MixtureWeights MixtureWeights::from_ab(double a, double b) { return MixtureWeights(a, b, 1.0 - a - b); }

MixtureWeights MixtureWeights::lattice(int i, int j, int n) {
  if (n < 1 || i < 0 || j < 0 || i + j > n) throw std::invalid_argument("invalid lattice point");
  const double dn = n;
  return MixtureWeights(i / dn, j / dn, (n - i - j) / dn);
}

MixtureWeights MixtureWeights::centroid() { return MixtureWeights(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0); }

MixtureWeights MixtureWeights::vertex(Axis axis) {
  std::array<double, 3> w{0.0, 0.0, 0.0};
  w[index(axis)] = 1.0;
  return MixtureWeights(w[0], w[1], w[2]);
}

double PauliEigenvalues::operator[](Axis axis) const {
  switch (axis) {
    case Axis::X: return lx;
    case Axis::Y: return ly;
    case Axis::Z: return lz;
  }
  return 0.0;
}

void require_open_p(double p, std::string_view what) {
  if (!(p >= 0.0 && p < 0.5)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1/2)");
  }
}

Matrix2c pauli_channel_action(const Matrix2c& m, Axis axis, double p) {
  const Matrix2c& s = pauli(axis);
  return (1.0 - p) * m + p * (s * m * s);
}

DensityMatrix apply_pauli_channel(const DensityMatrix& rho, Axis axis, double p) {
  if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("p must lie in [0, 1/2]");
  return DensityMatrix::from_matrix(pauli_channel_action(rho.matrix(), axis, p));
}

DensityMatrix apply_pauli_map(const DensityMatrix& rho, const PauliEigenvalues& lambda) {
  const BlochVector a = rho.bloch();
  return DensityMatrix::from_bloch({lambda.lx * a.a1, lambda.ly * a.a2, lambda.lz * a.a3});
}

PauliEigenvalues three_mix_eigenvalues(const MixtureWeights& w, double p) {
  require_open_p(p);
  // E_k fixes axis k and scales the other two by 1 - 2p.
  return {1.0 - 2.0 * (1.0 - w.a()) * p,
          1.0 - 2.0 * (1.0 - w.b()) * p,
          1.0 - 2.0 * (1.0 - w.c()) * p};
}

PauliEigenvalues two_mix_eigenvalues(double a, double p) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("a must lie in [0, 1]");
  require_open_p(p);
  return {1.0 - 2.0 * p, 1.0 - 2.0 * a * p, 1.0 - 2.0 * (1.0 - a) * p};
}

}  // namespace pauli_simplex
