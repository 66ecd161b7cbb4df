#pragma once

// Geometry of the Pauli simplex: the curves Gamma_j = 0 bounding the
// non-Markovian regions, their measure (quadrature and Monte Carlo), the
// equilateral "Pauli neutral" embedding, and the classified lattice scan.
//
// Measures are uniform in the (a, b) chart, normalized so the whole simplex
// has measure 1 (the chart area is 1/2).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pauli_simplex/channels.hpp"
#include "pauli_simplex/divisibility.hpp"
#include "pauli_simplex/quadrature.hpp"

namespace pauli_simplex {

/// Upper end of the band of own-weights b for which gamma_Y(p = 1/2 - x) can
/// vanish: beta(x) = (2 - sqrt(4x^2 - 4x + 5)) / (2x - 1); beta(0) = sqrt(5) - 2.
double beta(double x);

struct BoundaryRoots {
  double a_minus = 0.0;
  double a_plus = 0.0;
};

/// Roots in a of gamma_Y(a, b, 1 - a - b; p = 1/2 - x) = 0. gamma_Y is negative
/// strictly between them. Returns nullopt for b > beta(x).
std::optional<BoundaryRoots> boundary_a(double b, double x = 0.0);

/// sqrt(b^4 + 4b^3 - 2b^2 - 4b + 1) / (b + 1) = a_+(b, 0) - a_-(b, 0).
double boundary_integrand(double b);

enum class Branch { Minus, Plus };

struct BoundarySample {
  Branch branch;
  double own;      // weight of the region's own axis (b for R_Y)
  double partner;  // a_- or a_+
  MixtureWeights w;
};

struct BoundaryCurve {
  Axis region;
  std::vector<BoundarySample> samples;
};

/// The closed curve Gamma_region = 0: the a_- branch for own-weight 0 .. beta(0),
/// then the a_+ branch back down, sharing the tip sample. 2n - 1 samples.
BoundaryCurve boundary_curve(Axis region, int points);

/// Simplex weights with `own` on the region's axis and `partner` on the axis
/// that plays the role of a in gamma_Y(a, b).
MixtureWeights region_point(Axis region, double own, double partner);

/// 2 * integral_0^{beta(0)} boundary_integrand(b) db, to within tol.
QuadratureResult region_measure_integral(double tol);

/// Measure of R_region (identical for all three by symmetry). Throws
/// ConvergenceError when the quadrature cannot reach tol.
double region_measure_quadrature(Axis region, double tol);

enum class MeasureMethod { Quadrature, MonteCarlo };

struct MeasureReport {
  MeasureMethod method = MeasureMethod::Quadrature;
  std::array<double, 3> region{};        // |R_X|, |R_Y|, |R_Z|
  std::array<double, 3> region_error{};  // per-region error estimate
  double total = 0.0;
  double markovian = 0.0;
  double error_estimate = 0.0;           // error of `total`

  // Monte Carlo only
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::array<std::uint64_t, 3> region_counts{};
};

MeasureReport total_measures(double tol);

/// Samples per independently seeded stream; fixes the result regardless of
/// how many threads run the streams.
inline constexpr std::uint64_t kMonteCarloChunk = 65536;

/// Uniform simplex sampling by normalized unit exponentials, then classify.
/// Standard errors are binomial, sqrt(q(1 - q)/n); a degenerate estimate
/// q in {0, 1} reports the worst case 0.5/sqrt(n) instead of zero.
/// threads == 0 uses the hardware concurrency.
MeasureReport region_measure_montecarlo(std::uint64_t n, std::uint64_t seed, unsigned threads = 1);

struct PlanarPoint {
  double u = 0.0;
  double v = 0.0;
};

/// a V_x + b V_y + c V_z with V_x = (0,0), V_y = (1,0), V_z = (1/2, sqrt(3)/2).
PlanarPoint to_pauli_neutral(const MixtureWeights& w);
MixtureWeights from_pauli_neutral(const PlanarPoint& pt);

struct GridPoint {
  int i = 0;
  int j = 0;
  MixtureWeights w;
  RegionLabel label;
  PlanarPoint uv;
};

/// Lattice w = (i/n, j/n, (n-i-j)/n) in lexicographic (i, j) order,
/// (n+1)(n+2)/2 points, each classified and embedded.
std::vector<GridPoint> scan_grid(int n, unsigned threads = 1);

struct ScanSummary {
  std::size_t points = 0;
  std::size_t markovian = 0;
  std::array<std::size_t, 3> region{};

  double markovian_fraction() const { return points ? double(markovian) / double(points) : 0.0; }
};

ScanSummary summarize(const std::vector<GridPoint>& grid);

}  // namespace pauli_simplex
