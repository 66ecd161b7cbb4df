#include "pauli_simplex/divisibility.hpp"

#include <array>
#include <limits>

#include "pauli_simplex/generator.hpp"

namespace pauli_simplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (1 - w)/w split into a divergence count and a finite part.
struct Reciprocal {
  int diverging = 0;
  double finite = 0.0;
};

Reciprocal reciprocal_term(double w) {
  const double r = (1.0 - w) / w;
  // subnormal weights overflow and are treated as zero
  if (w == 0.0 || r == kInf) return {1, 0.0};
  return {0, r};
}

double limit_rate(const Reciprocal& own, const Reciprocal& k, const Reciprocal& l) {
  const int net = k.diverging + l.diverging - own.diverging;
  if (net > 0) return kInf;
  if (net < 0) return -kInf;
  return (k.finite + l.finite) - own.finite;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Markovian ? "MARKOVIAN" : "NONMARKOVIAN";
}

double GammaLimit::operator[](Axis axis) const {
  switch (axis) {
    case Axis::X: return gx;
    case Axis::Y: return gy;
    case Axis::Z: return gz;
  }
  return 0.0;
}

GammaLimit gamma_limit(const MixtureWeights& w) {
  const Reciprocal ra = reciprocal_term(w.a());
  const Reciprocal rb = reciprocal_term(w.b());
  const Reciprocal rc = reciprocal_term(w.c());
  return {limit_rate(ra, rb, rc), limit_rate(rb, ra, rc), limit_rate(rc, ra, rb)};
}

RegionLabel classify(const MixtureWeights& w) {
  RegionLabel label;
  label.gamma_limit = gamma_limit(w);
  for (Axis axis : kAxes) {
    if (label.gamma_limit[axis] < -kNegativeTol) {
      // at most one limit can be negative: gamma_j + gamma_k = 2 f_l >= 0
      label.tag = Verdict::NonMarkovian;
      label.region = axis;
      break;
    }
  }
  return label;
}

bool p_divisibility_check(const MixtureWeights& w, std::span<const double> p_grid) {
  for (double p : p_grid) {
    const DecayRates g = three_mix_rates(w, p);
    if (g.gx + g.gy < -kNegativeTol || g.gy + g.gz < -kNegativeTol || g.gz + g.gx < -kNegativeTol) {
      return false;
    }
  }
  return true;
}

}  // namespace pauli_simplex
