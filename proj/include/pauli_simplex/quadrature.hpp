#pragma once

#include <functional>
#include <stdexcept>

namespace pauli_simplex {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of |S2 - S1| / 15 over accepted panels
  bool converged = true;
  long evaluations = 0;
};

/// Adaptive Simpson with bisection and Richardson correction. The tolerance is
/// split evenly between the two halves at every level; panels that hit
/// max_depth are accepted and flag the result as not converged.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                                  double tol, int max_depth = 50);

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const { return achieved_; }

 private:
  double achieved_;
};

}  // namespace pauli_simplex
