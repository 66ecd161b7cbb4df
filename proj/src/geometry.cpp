#include "pauli_simplex/geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace pauli_simplex {

namespace {

constexpr double kRadicandClip = 1e-12;
const double kSqrt3 = std::sqrt(3.0);

double clip_radicand(double r) {
  if (r < 0.0 && r > -kRadicandClip) return 0.0;
  return r;
}

// Worst-case binomial error for degenerate estimates.
double binomial_se(std::uint64_t k, std::uint64_t n) {
  const double q = double(k) / double(n);
  if (k == 0 || k == n) return 0.5 / std::sqrt(double(n));
  return std::sqrt(q * (1.0 - q) / double(n));
}

}  // namespace

double beta(double x) {
  if (!(x >= 0.0 && x < 0.5)) throw std::invalid_argument("x must lie in [0, 1/2)");
  // (2 - s)/(2x - 1) with s = sqrt(4x^2 - 4x + 5), rationalized: s^2 - 4 = (2x - 1)^2
  const double s = std::sqrt(4.0 * x * x - 4.0 * x + 5.0);
  return (1.0 - 2.0 * x) / (2.0 + s);
}

std::optional<BoundaryRoots> boundary_a(double b, double x) {
  if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("b must lie in [0, 1]");
  if (b > beta(x)) return std::nullopt;

  // gamma_Y = 0 reduces to a^2 - (1 - b) a + q = 0.
  double q = 0.0;
  double radicand = 0.0;
  if (x == 0.0) {
    q = b * (1.0 - b) / (1.0 + b);
    radicand = (1.0 - b) * (1.0 - 4.0 * b - b * b) / (1.0 + b);
  } else {
    const double p = 0.5 - x;
    q = b * (1.0 - 2.0 * p + 2.0 * (1.0 - b) * p * p) / (2.0 * p * (1.0 - (1.0 - b) * p));
    radicand = (1.0 - b) * (1.0 - b) - 4.0 * q;
  }
  radicand = clip_radicand(radicand);
  if (radicand < 0.0) {
    throw std::logic_error("negative boundary radicand " + std::to_string(radicand) + " inside the band");
  }
  const double a_plus = 0.5 * ((1.0 - b) + std::sqrt(radicand));
  // product of roots is q; avoids cancellation for small b
  const double a_minus = a_plus > 0.0 ? q / a_plus : 0.0;
  return BoundaryRoots{a_minus, a_plus};
}

double boundary_integrand(double b) {
  const double poly = (((b + 4.0) * b - 2.0) * b - 4.0) * b + 1.0;
  const double r = clip_radicand(poly);
  if (r < 0.0) throw std::logic_error("boundary integrand evaluated outside [0, sqrt(5) - 2]");
  return std::sqrt(r) / (b + 1.0);
}

MixtureWeights region_point(Axis region, double own, double partner) {
  const double rest = 1.0 - own - partner;
  switch (region) {
    case Axis::X: return MixtureWeights(own, partner, rest);
    case Axis::Y: return MixtureWeights(partner, own, rest);
    case Axis::Z: return MixtureWeights(partner, rest, own);
  }
  throw std::invalid_argument("unknown region");
}

BoundaryCurve boundary_curve(Axis region, int points) {
  if (points < 2) throw std::invalid_argument("boundary curve needs at least 2 points per branch");
  const double top = beta(0.0);
  BoundaryCurve curve{region, {}};
  curve.samples.reserve(2 * std::size_t(points) - 1);
  auto own_at = [&](int k) { return k == points - 1 ? top : top * double(k) / double(points - 1); };
  for (int k = 0; k < points; ++k) {
    const double own = own_at(k);
    const BoundaryRoots r = *boundary_a(own, 0.0);
    curve.samples.push_back({Branch::Minus, own, r.a_minus, region_point(region, own, r.a_minus)});
  }
  for (int k = points - 2; k >= 0; --k) {
    const double own = own_at(k);
    const BoundaryRoots r = *boundary_a(own, 0.0);
    curve.samples.push_back({Branch::Plus, own, r.a_plus, region_point(region, own, r.a_plus)});
  }
  return curve;
}

QuadratureResult region_measure_integral(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  QuadratureResult r = adaptive_simpson(boundary_integrand, 0.0, beta(0.0), 0.5 * tol);
  r.value *= 2.0;
  r.error_estimate *= 2.0;
  return r;
}

double region_measure_quadrature(Axis /*region*/, double tol) {
  const QuadratureResult r = region_measure_integral(tol);
  if (!r.converged) {
    throw ConvergenceError("region measure quadrature did not reach tolerance", r.error_estimate);
  }
  return r.value;
}

MeasureReport total_measures(double tol) {
  const QuadratureResult r = region_measure_integral(tol);
  if (!r.converged) {
    throw ConvergenceError("region measure quadrature did not reach tolerance", r.error_estimate);
  }
  MeasureReport rep;
  rep.method = MeasureMethod::Quadrature;
  rep.region = {r.value, r.value, r.value};
  rep.region_error = {r.error_estimate, r.error_estimate, r.error_estimate};
  rep.total = 3.0 * r.value;
  rep.markovian = 1.0 - rep.total;
  rep.error_estimate = 3.0 * r.error_estimate;
  return rep;
}

MeasureReport region_measure_montecarlo(std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  const std::uint64_t chunks = (n + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<std::array<std::uint64_t, 3>> counts(chunks, {0, 0, 0});

  detail::parallel_for(chunks, threads, [&](std::size_t k) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(k),
                      std::uint32_t(std::uint64_t(k) >> 32)};
    std::mt19937_64 rng(seq);
    std::exponential_distribution<double> exp1(1.0);
    const std::uint64_t begin = k * kMonteCarloChunk;
    const std::uint64_t end = std::min(n, begin + kMonteCarloChunk);
    auto& local = counts[k];
    for (std::uint64_t s = begin; s < end; ++s) {
      const double e0 = exp1(rng);
      const double e1 = exp1(rng);
      const double e2 = exp1(rng);
      const double sum = e0 + e1 + e2;
      const RegionLabel label = classify(MixtureWeights(e0 / sum, e1 / sum, e2 / sum));
      if (label.region) ++local[index(*label.region)];
    }
  });

  MeasureReport rep;
  rep.method = MeasureMethod::MonteCarlo;
  rep.samples = n;
  rep.seed = seed;
  for (const auto& c : counts) {
    for (std::size_t j = 0; j < 3; ++j) rep.region_counts[j] += c[j];
  }
  std::uint64_t nonmarkovian = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    rep.region[j] = double(rep.region_counts[j]) / double(n);
    rep.region_error[j] = binomial_se(rep.region_counts[j], n);
    nonmarkovian += rep.region_counts[j];
  }
  rep.total = double(nonmarkovian) / double(n);
  rep.markovian = 1.0 - rep.total;
  rep.error_estimate = binomial_se(nonmarkovian, n);
  return rep;
}

PlanarPoint to_pauli_neutral(const MixtureWeights& w) {
  return {w.b() + 0.5 * w.c(), 0.5 * kSqrt3 * w.c()};
}

MixtureWeights from_pauli_neutral(const PlanarPoint& pt) {
  const double c = 2.0 * pt.v / kSqrt3;
  const double b = pt.u - 0.5 * c;
  return MixtureWeights(1.0 - b - c, b, c);
}

std::vector<GridPoint> scan_grid(int n, unsigned threads) {
  if (n < 1) throw std::invalid_argument("grid resolution n must be >= 1");
  std::vector<GridPoint> grid;
  grid.reserve(std::size_t(n + 1) * std::size_t(n + 2) / 2);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      const MixtureWeights w = MixtureWeights::lattice(i, j, n);
      grid.push_back({i, j, w, RegionLabel{}, to_pauli_neutral(w)});
    }
  }
  detail::parallel_for(grid.size(), threads, [&](std::size_t k) { grid[k].label = classify(grid[k].w); });
  return grid;
}

ScanSummary summarize(const std::vector<GridPoint>& grid) {
  ScanSummary s;
  s.points = grid.size();
  for (const GridPoint& g : grid) {
    if (g.label.region) {
      ++s.region[index(*g.label.region)];
    } else {
      ++s.markovian;
    }
  }
  return s;
}

}  // namespace pauli_simplex
