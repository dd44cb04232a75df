#include "lpevac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace lpevac {
namespace numerics {

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol >= 0.0) || max_iter < 1) {
    throw std::invalid_argument("Tolerance requires abs_tol > 0, rel_tol >= 0, max_iter >= 1");
  }
}

namespace {

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod_segment(const ScalarFn& f, double a, double b, int depth) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  // The G10 nodes are re-evaluated: ten redundant calls per segment.
  auto g = [&f](double x) { return f(x); };
  const double kronrod = gauss_kronrod<double, 21>::integrate(g, a, b, 0, 0.0);
  const double gauss10 = gauss<double, 10>::integrate(g, a, b);
  return {a, b, kronrod, std::abs(kronrod - gauss10), depth};
}

constexpr std::size_t kMaxSegments = 200000;

}  // namespace

double integrate_adaptive(const ScalarFn& f, double a, double b, const Tolerance& tol) {
  tol.validate();
  if (!(a <= b)) throw std::invalid_argument("integrate_adaptive requires a <= b");
  if (a == b) return 0.0;

  std::priority_queue<Segment> heap;
  heap.push(kronrod_segment(f, a, b, 0));
  double total = heap.top().value;
  double error = heap.top().error;

  auto converged = [&] { return error <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total)); };

  while (!converged()) {
    const Segment worst = heap.top();
    if (!std::isfinite(total)) {
      throw ConvergenceError("integrate_adaptive: non-finite integrand", total, error);
    }
    if (worst.depth >= tol.max_iter || heap.size() >= kMaxSegments) {
      throw ConvergenceError("integrate_adaptive: subdivision budget exhausted", total, error);
    }
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      throw ConvergenceError("integrate_adaptive: interval below machine resolution", total, error);
    }
    const Segment left = kronrod_segment(f, worst.a, mid, worst.depth + 1);
    const Segment right = kronrod_segment(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  double sum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    heap.pop();
  }
  return sum;
}

BracketedRoot find_root_bracketed(const ScalarFn& f, double lo, double hi, const Tolerance& tol) {
  tol.validate();
  if (lo > hi) std::swap(lo, hi);
  const double flo = f(lo);
  const double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi)) {
    throw BracketError("find_root_bracketed: non-finite value at bracket endpoint");
  }
  if (flo == 0.0) return {lo, lo, lo, 0.0};
  if (fhi == 0.0) return {hi, hi, hi, 0.0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw BracketError("find_root_bracketed: no sign change on [lo, hi]");
  }

  const double width_tol = tol.abs_tol;
  auto done = [width_tol](double a, double b) { return std::abs(b - a) <= width_tol; };
  // TOMS 748 needs a generous budget; the bisection floor alone takes ~log2 steps.
  std::uintmax_t iterations = static_cast<std::uintmax_t>(std::max(tol.max_iter, 200));
  const auto bracket = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, iterations);

  const double a = bracket.first;
  const double b = bracket.second;
  double root = 0.5 * (a + b);
  double residual = f(root);
  // Prefer an endpoint that is an exact root.
  for (double x : {a, b}) {
    const double fx = f(x);
    if (std::abs(fx) < std::abs(residual)) {
      root = x;
      residual = fx;
    }
  }
  if (std::abs(b - a) > width_tol && std::abs(residual) > tol.abs_tol) {
    throw ConvergenceError("find_root_bracketed: iteration budget exhausted", root, std::abs(b - a));
  }
  return {a, b, root, residual};
}

std::pair<double, double> golden_section_maximize(const ScalarFn& f, double lo, double hi,
                                                  const Tolerance& tol) {
  tol.validate();
  if (lo > hi) std::swap(lo, hi);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);

  // max_iter is often sized for quadrature depth; 200 golden steps always reach abs_tol.
  const int budget = std::max(tol.max_iter, 200);
  for (int i = 0; i < budget; ++i) {
    const double centre = 0.5 * (a + b);
    if (b - a <= std::max(tol.abs_tol, tol.rel_tol * std::abs(centre))) break;
    if (fc == fd) {
      // A unimodal maximum lies between two equal samples.
      a = c;
      b = d;
      c = b - inv_phi * (b - a);
      d = a + inv_phi * (b - a);
      fc = f(c);
      fd = f(d);
    } else if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  double best_x = fc >= fd ? c : d;
  double best_f = std::max(fc, fd);
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  return {best_x, best_f};
}

std::pair<double, double> maximize_1d(const ScalarFn& f, double lo, double hi, const Tolerance& tol,
                                      int grid_points) {
  tol.validate();
  if (grid_points < 2) throw std::invalid_argument("maximize_1d requires at least 2 grid points");
  if (lo > hi) std::swap(lo, hi);
  if (lo == hi) return {lo, f(lo)};

  const double step = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_f = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double x = i + 1 == grid_points ? hi : lo + i * step;
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best = i;
    }
  }
  const double best_x = best + 1 == grid_points ? hi : lo + best * step;

  const double cell_lo = std::max(lo, best_x - step);
  const double cell_hi = std::min(hi, best_x + step);
  const auto refined = golden_section_maximize(f, cell_lo, cell_hi, tol);
  if (refined.second >= best_f) return refined;
  return {best_x, best_f};
}

}  // namespace numerics
}  // namespace lpevac
