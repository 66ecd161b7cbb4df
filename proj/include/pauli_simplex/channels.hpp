#pragma once

// Qubit states, Pauli channels and their convex mixtures.
//
// Pauli channels are unital and diagonal in the Pauli basis {1, X, Y, Z}:
// a channel is fully described by the eigenvalue triple (lx, ly, lz) with
// E(sigma_i) = l_i sigma_i. All downstream math works with that triple; the
// 2x2 operator action is kept as an independent cross-check path.

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace pauli_simplex {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

enum class Axis { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

constexpr std::size_t index(Axis axis) { return static_cast<std::size_t>(axis); }
std::string_view to_string(Axis axis);

/// Pauli matrix sigma_x, sigma_y or sigma_z.
const Matrix2c& pauli(Axis axis);

struct BlochVector {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double norm() const;
  double operator[](Axis axis) const;
};

/// Validated qubit density matrix: Hermitian, unit trace, positive within tol.
class DensityMatrix {
 public:
  static constexpr double kDefaultTol = 1e-12;

  /// rho = (1 + a.sigma) / 2. Throws std::invalid_argument if |a| > 1 + tol.
  static DensityMatrix from_bloch(const BlochVector& bloch, double tol = kDefaultTol);
  static DensityMatrix from_matrix(const Matrix2c& m, double tol = kDefaultTol);
  static DensityMatrix maximally_mixed();

  const Matrix2c& matrix() const { return m_; }
  BlochVector bloch() const;

 private:
  explicit DensityMatrix(const Matrix2c& m) : m_(m) {}
  Matrix2c m_;
};

/// QDS parametrization p(t) = (1 - exp(-r t)) / 2 with pdot = r (1 - 2p) / 2.
class SemigroupParam {
 public:
  SemigroupParam(double r, double t);

  double r() const { return r_; }
  double t() const { return t_; }
  double p() const { return p_; }
  double pdot() const { return pdot_; }

 private:
  double r_;
  double t_;
  double p_;
  double pdot_;
};

SemigroupParam semigroup_p(double r, double t);

/// pdot = r (1 - 2p) / 2, the QDS rate expressed through p.
double semigroup_pdot(double r, double p);

enum class WeightPolicy {
  Renormalize,  // |sum - 1| <= 1e-12 is divided out
  Strict,       // sum must already be 1 to rounding
};

/// A point (a, b, c) of the 2-simplex; the weights of E_x, E_y, E_z.
class MixtureWeights {
 public:
  static constexpr double kSumTol = 1e-12;

  MixtureWeights(double a, double b, double c,
                 WeightPolicy policy = WeightPolicy::Renormalize);

  /// c = 1 - a - b.
  static MixtureWeights from_ab(double a, double b);
  /// (i/n, j/n, (n-i-j)/n); every weight is an exact integer ratio.
  static MixtureWeights lattice(int i, int j, int n);
  static MixtureWeights centroid();
  static MixtureWeights vertex(Axis axis);

  double a() const { return w_[0]; }
  double b() const { return w_[1]; }
  double c() const { return w_[2]; }
  double operator[](Axis axis) const { return w_[index(axis)]; }
  const std::array<double, 3>& values() const { return w_; }

 private:
  std::array<double, 3> w_;
};

struct PauliEigenvalues {
  double lx = 1.0;
  double ly = 1.0;
  double lz = 1.0;

  double operator[](Axis axis) const;
};

/// Throws std::invalid_argument unless 0 <= p < 1/2.
void require_open_p(double p, std::string_view what = "p");

/// Linear action (1-p) m + p sigma m sigma on an arbitrary 2x2 operator.
Matrix2c pauli_channel_action(const Matrix2c& m, Axis axis, double p);

/// (1-p) rho + p sigma_k rho sigma_k, for p in [0, 1/2].
DensityMatrix apply_pauli_channel(const DensityMatrix& rho, Axis axis, double p);

/// Applies the Pauli map with the given eigenvalues: a_i -> l_i a_i.
DensityMatrix apply_pauli_map(const DensityMatrix& rho, const PauliEigenvalues& lambda);

/// Eigenvalues of a E_x^p + b E_y^p + c E_z^p.
PauliEigenvalues three_mix_eigenvalues(const MixtureWeights& w, double p);

/// Eigenvalues of a E_z^p + (1-a) E_y^p.
PauliEigenvalues two_mix_eigenvalues(double a, double p);

}  // namespace pauli_simplex
