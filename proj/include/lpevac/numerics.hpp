#ifndef LPEVAC_NUMERICS_HPP
#define LPEVAC_NUMERICS_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace lpevac {
namespace numerics {

using ScalarFn = std::function<double(double)>;

/// Accuracy request shared by the 1-D kernels.
///
/// For quadrature `max_iter` bounds the subdivision depth, for root finding
/// and golden-section search it bounds the iteration count.
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_iter = 60;

  /// Throws std::invalid_argument unless abs_tol > 0, rel_tol >= 0, max_iter >= 1.
  void validate() const;
};

struct BracketedRoot {
  double lo = 0.0;
  double hi = 0.0;
  double root = 0.0;
  double residual = 0.0;
};

/// Raised when an iterative kernel exhausts its budget. Carries the best
/// estimate found and an error bound for it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// Raised when a root is requested on an interval without a sign change.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive Gauss-Kronrod (21 point) quadrature of f over [a, b].
///
/// The result satisfies |I - exact| <= max(abs_tol, rel_tol * |I|) according to
/// the Kronrod error estimate. Throws ConvergenceError if the estimate is still
/// above that bound after `max_iter` levels of bisection.
double integrate_adaptive(const ScalarFn& f, double a, double b, const Tolerance& tol = {});

/// Root of f in [lo, hi] by TOMS 748 with a bisection safeguard.
///
/// Requires f(lo) * f(hi) <= 0 (BracketError otherwise). Stops when the
/// bracket is narrower than abs_tol or |f| <= abs_tol at the iterate.
BracketedRoot find_root_bracketed(const ScalarFn& f, double lo, double hi,
                                  const Tolerance& tol = {});

/// Golden-section search for a maximum of f on [lo, hi]. Returns (x*, f(x*)).
/// Only a local maximizer is guaranteed.
std::pair<double, double> golden_section_maximize(const ScalarFn& f, double lo, double hi,
                                                  const Tolerance& tol = {});

/// Global maximum of f on [lo, hi] up to grid resolution: samples a uniform
/// grid of `grid_points` (>= 2) points, then refines the best cell with
/// golden-section search. The returned value is never below the best sample.
std::pair<double, double> maximize_1d(const ScalarFn& f, double lo, double hi,
                                      const Tolerance& tol = {}, int grid_points = 4096);

}  // namespace numerics
}  // namespace lpevac

#endif  // LPEVAC_NUMERICS_HPP
