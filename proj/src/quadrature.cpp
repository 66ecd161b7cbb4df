#include "pauli_simplex/quadrature.hpp"

#include <cmath>

namespace pauli_simplex {

namespace {

// guards against accidental early agreement of the two Simpson estimates
constexpr int kMinDepth = 4;

struct Panel {
  double lo, hi;
  double f_lo, f_mid, f_hi;
  double whole;
};

class Simpson {
 public:
  Simpson(const std::function<double(double)>& f, int max_depth) : f_(f), max_depth_(max_depth) {}

  double eval(double x) {
    ++result_.evaluations;
    return f_(x);
  }

  void refine(const Panel& p, double tol, int depth) {
    const double mid = 0.5 * (p.lo + p.hi);
    const double lm = 0.5 * (p.lo + mid);
    const double rm = 0.5 * (mid + p.hi);
    const double f_lm = eval(lm);
    const double f_rm = eval(rm);
    const double h = p.hi - p.lo;
    const double left = h / 12.0 * (p.f_lo + 4.0 * f_lm + p.f_mid);
    const double right = h / 12.0 * (p.f_mid + 4.0 * f_rm + p.f_hi);
    const double delta = left + right - p.whole;
    const bool accept = depth >= kMinDepth && std::abs(delta) <= 15.0 * tol;
    if (accept || depth >= max_depth_ || mid <= p.lo || mid >= p.hi) {
      if (std::abs(delta) > 15.0 * tol) result_.converged = false;
      result_.value += left + right + delta / 15.0;
      result_.error_estimate += std::abs(delta) / 15.0;
      return;
    }
    refine({p.lo, mid, p.f_lo, f_lm, p.f_mid, left}, 0.5 * tol, depth + 1);
    refine({mid, p.hi, p.f_mid, f_rm, p.f_hi, right}, 0.5 * tol, depth + 1);
  }

  QuadratureResult result_;

 private:
  const std::function<double(double)>& f_;
  int max_depth_;
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                                  double tol, int max_depth) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be > 0");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("integration limits must be finite");
  if (lo == hi) return {};
  Simpson s(f, max_depth);
  const double f_lo = s.eval(lo);
  const double f_hi = s.eval(hi);
  const double f_mid = s.eval(0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
  s.refine({lo, hi, f_lo, f_mid, f_hi, whole}, tol, 0);
  return s.result_;
}

}  // namespace pauli_simplex
