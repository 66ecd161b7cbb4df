#pragma once

// CP-divisibility classification of points of the Pauli simplex.
//
// A reduced rate gamma_j that turns negative stays negative (its p-derivative
// is 2(f_k^2 + f_l^2 - f_j^2) < 0 once f_j > f_k + f_l), so a channel is
// CP indivisible iff some rate is negative in the limit p -> 1/2.

#include <optional>
#include <span>
#include <string_view>

#include "pauli_simplex/channels.hpp"

namespace pauli_simplex {

/// Rates below -kNegativeTol count as negative; boundary points are Markovian.
inline constexpr double kNegativeTol = 1e-12;

enum class Verdict { Markovian, NonMarkovian };

std::string_view to_string(Verdict verdict);

/// Limiting reduced rates at p = 1/2. Entries may be +inf or -inf.
struct GammaLimit {
  double gx = 0.0;
  double gy = 0.0;
  double gz = 0.0;

  double operator[](Axis axis) const;
};

struct RegionLabel {
  Verdict tag = Verdict::Markovian;
  std::optional<Axis> region;  // set iff tag == NonMarkovian
  GammaLimit gamma_limit;

  bool markovian() const { return tag == Verdict::Markovian; }
};

/// Gamma_j = sum_{k != j} (1 - w_k)/w_k - (1 - w_j)/w_j, taken as the exact
/// p -> 1/2 limit: each zero weight contributes +-1/(1 - 2p), so the net
/// number of zero weights decides between +inf, -inf and the finite part.
GammaLimit gamma_limit(const MixtureWeights& w);

RegionLabel classify(const MixtureWeights& w);

/// True iff every pairwise sum of reduced rates is >= -1e-12 on the grid.
bool p_divisibility_check(const MixtureWeights& w, std::span<const double> p_grid);

}  // namespace pauli_simplex
