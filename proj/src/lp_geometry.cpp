#include "lpevac/lp_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "lpevac/numerics.hpp"

namespace lpevac {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Panels are accepted once G20 on the whole panel agrees with G20 on its two
// halves to this fraction of the panel width.
constexpr double kPanelTolerance = 1e-14;
constexpr int kMaxPanelDepth = 60;
constexpr int kMinPanelDepth = 3;

using PanelRule = boost::math::quadrature::gauss<double, 20>;

// Speed of the smooth chart z -> (z, (1 - z^p)^(1/p)) for 0 <= z < 1. The
// ratio form keeps every intermediate in range for z <= 2^(-1/p), even for
// large p.
double smooth_speed(double p, double z) {
  z = std::abs(z);
  if (z == 0.0) return 1.0;
  const double zp = std::pow(z, p);
  const double ratio = zp / (1.0 - zp);
  return std::pow(1.0 + std::pow(ratio, p - 1.0), 1.0 / p);
}

// (|a|^p + |b|^p)^(1/p) scaled by the larger magnitude.
double scaled_p_sum(double p, double a, double b) {
  a = std::abs(a);
  b = std::abs(b);
  const double hi = std::max(a, b);
  if (hi == 0.0) return 0.0;
  const double lo = std::min(a, b);
  if (std::isinf(p)) return hi;
  if (p == 1.0) return a + b;
  return hi * std::pow(1.0 + std::pow(lo / hi, p), 1.0 / p);
}

// Rotation by a quarter turn, applied `quadrant` times.
Point2 rotate_quarter(Point2 v, int quadrant) {
  for (int i = 0; i < quadrant; ++i) v = {-v.y, v.x};
  return v;
}

}  // namespace

PExponent PExponent::finite(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw DomainError("p must satisfy p >= 1, got " + std::to_string(p));
  }
  return PExponent(p);
}

PExponent PExponent::conjugate() const {
  if (is_infinite()) return finite(1.0);
  if (is_one()) return infinity();
  return finite(value_ / (value_ - 1.0));
}

std::string PExponent::to_string() const {
  if (is_infinite()) return "inf";
  std::ostringstream out;
  out.precision(17);
  out << value_;
  return out.str();
}

bool large_p_warning(const PExponent& p) {
  return !p.is_infinite() && p.value() > kLargePThreshold;
}

double reduce_angle(double phi) {
  if (!std::isfinite(phi)) throw DomainError("angle must be finite");
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double norm_p(const PExponent& p, Point2 v) { return scaled_p_sum(p.value(), v.x, v.y); }

double chord_length(const PExponent& p, Point2 a, Point2 b) { return norm_p(p, a - b); }

// ---------------------------------------------------------------------------
// UnitCircle

UnitCircle::UnitCircle(const PExponent& p) : p_(p) {
  if (p_.is_infinite()) {
    diagonal_ = 1.0;
    pi_ = 4.0;
  } else if (p_.is_one()) {
    diagonal_ = 0.5;
    pi_ = 4.0;
  } else {
    diagonal_ = std::pow(2.0, -1.0 / p_.value());
    build_panels();
    pi_ = 4.0 * (panels_.back().before + panels_.back().value);
  }
}

std::shared_ptr<const UnitCircle> UnitCircle::shared(const PExponent& p) {
  static std::mutex mutex;
  static std::map<double, std::shared_ptr<const UnitCircle>> cache;
  constexpr std::size_t kCapacity = 512;

  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(p.value());
    if (it != cache.end()) return it->second;
  }
  // Construction is deterministic, so a racing duplicate is identical.
  auto circle = std::make_shared<const UnitCircle>(p);
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() >= kCapacity) cache.clear();
  return cache.emplace(p.value(), std::move(circle)).first->second;
}

void UnitCircle::build_panels() {
  const double p = p_.value();
  auto speed = [p](double z) { return smooth_speed(p, z); };

  struct Pending {
    double lo;
    double hi;
    int depth;
  };
  std::vector<Pending> stack{{0.0, diagonal_, 0}};
  std::vector<std::pair<double, double>> accepted;
  while (!stack.empty()) {
    const Pending cur = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (cur.lo + cur.hi);
    bool accept = cur.depth >= kMaxPanelDepth;
    if (!accept && cur.depth >= kMinPanelDepth) {
      const double whole = PanelRule::integrate(speed, cur.lo, cur.hi);
      const double halves =
          PanelRule::integrate(speed, cur.lo, mid) + PanelRule::integrate(speed, mid, cur.hi);
      accept = std::abs(whole - halves) <= kPanelTolerance * (cur.hi - cur.lo);
    }
    if (accept) {
      accepted.emplace_back(cur.lo, cur.hi);
    } else {
      // Right half first so the left half is processed next: panels come out ordered.
      stack.push_back({mid, cur.hi, cur.depth + 1});
      stack.push_back({cur.lo, mid, cur.depth + 1});
    }
  }

  const numerics::Tolerance tol{1e-300, 1e-14, 30};
  panels_.reserve(accepted.size());
  double before = 0.0;
  for (const auto& [lo, hi] : accepted) {
    double value = 0.0;
    try {
      value = numerics::integrate_adaptive(speed, lo, hi, tol);
    } catch (const numerics::ConvergenceError&) {
      // Only reachable for panels at the depth cap next to z = 0, where the
      // integrand is not smooth; the G20 value is within roundoff there.
      value = PanelRule::integrate(speed, lo, hi);
    }
    panels_.push_back({lo, hi, before, value});
    before += value;
  }
}

double UnitCircle::companion(double z) const {
  z = std::abs(z);
  if (p_.is_infinite()) return 1.0;
  if (p_.is_one()) return std::max(0.0, 1.0 - z);
  const double rest = 1.0 - std::pow(z, p_.value());
  return rest <= 0.0 ? 0.0 : std::pow(rest, 1.0 / p_.value());
}

double UnitCircle::chart_speed(double z) const {
  if (p_.is_infinite()) return 1.0;
  if (p_.is_one()) return 2.0;
  return smooth_speed(p_.value(), z);
}

std::size_t UnitCircle::panel_index(double z) const {
  const auto it = std::upper_bound(panels_.begin(), panels_.end(), z,
                                   [](double v, const Panel& panel) { return v < panel.lo; });
  return it == panels_.begin() ? 0 : static_cast<std::size_t>(it - panels_.begin()) - 1;
}

std::size_t UnitCircle::panel_index_by_length(double length) const {
  const auto it =
      std::upper_bound(panels_.begin(), panels_.end(), length,
                       [](double v, const Panel& panel) { return v < panel.before; });
  return it == panels_.begin() ? 0 : static_cast<std::size_t>(it - panels_.begin()) - 1;
}

double UnitCircle::panel_partial(const Panel& panel, double z) const {
  if (z <= panel.lo) return 0.0;
  if (z >= panel.hi) return panel.value;
  const double p = p_.value();
  return PanelRule::integrate([p](double x) { return smooth_speed(p, x); }, panel.lo, z);
}

double UnitCircle::octant_arc(double z) const {
  z = std::clamp(z, 0.0, diagonal_);
  if (p_.is_infinite()) return z;
  if (p_.is_one()) return 2.0 * z;
  const Panel& panel = panels_[panel_index(z)];
  return panel.before + panel_partial(panel, z);
}

double UnitCircle::octant_arc_inverse(double length) const {
  const double octant = pi_ / 4.0;
  length = std::clamp(length, 0.0, octant);
  if (p_.is_infinite()) return length;
  if (p_.is_one()) return 0.5 * length;
  if (length >= octant) return diagonal_;

  const Panel& panel = panels_[panel_index_by_length(length)];
  const double target = length - panel.before;
  if (target <= 0.0) return panel.lo;
  if (target >= panel.value) return panel.hi;

  // Safeguarded Newton on the panel: the derivative is the chart speed (>= 1).
  const double p = p_.value();
  double a = panel.lo;
  double b = panel.hi;
  double z = a + (b - a) * (target / panel.value);
  // Newton converges quadratically; stop once the residual is at the rounding
  // level of the cumulative length, since the step size never settles below it.
  const double resolution = 2.0 * std::numeric_limits<double>::epsilon() * length;
  for (int i = 0; i < 60; ++i) {
    const double g = panel_partial(panel, z) - target;
    if (std::abs(g) <= resolution) break;
    if (g < 0.0) {
      a = z;
    } else {
      b = z;
    }
    double next = z - g / smooth_speed(p, z);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    const double step = std::abs(next - z);
    z = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(z, 1e-300)) break;
  }
  return z;
}

double UnitCircle::chart_arc(double z) const {
  z = std::abs(z);
  if (z > 1.0) throw DomainError("chart coordinate must lie in [-1, 1]");
  if (z <= diagonal_) return octant_arc(z);
  return pi_ / 2.0 - octant_arc(companion(z));
}

CirclePoint UnitCircle::rho(double phi) const { return lpevac::rho(p_, phi); }

double UnitCircle::arc_coordinate(double phi) const {
  phi = reduce_angle(phi);
  const int quadrant = std::min(3, static_cast<int>(phi / kHalfPi));
  const double t = phi - quadrant * kHalfPi;
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double n = scaled_p_sum(p_.value(), c, s);
  const double x = c / n;
  const double y = s / n;
  const double quarter = pi_ / 2.0;
  // Below the diagonal the arc from (1, 0) mirrors the octant arc from (0, 1).
  const double local = y <= x ? octant_arc(y) : quarter - octant_arc(x);
  return quadrant * quarter + local;
}

CirclePoint UnitCircle::point_at(double s) const {
  const double perim = perimeter();
  s = std::fmod(s, perim);
  if (s < 0.0) s += perim;
  if (s >= perim) s = 0.0;

  const double quarter = pi_ / 2.0;
  const double octant = pi_ / 4.0;
  const int quadrant = std::min(3, static_cast<int>(s / quarter));
  const double local = s - quadrant * quarter;

  Point2 q1;
  if (local <= octant) {
    q1.y = octant_arc_inverse(local);
    q1.x = companion(q1.y);
  } else {
    q1.x = octant_arc_inverse(quarter - local);
    q1.y = companion(q1.x);
  }
  const double phi = reduce_angle(quadrant * kHalfPi + std::atan2(q1.y, q1.x));
  return {phi, rotate_quarter(q1, quadrant)};
}

double UnitCircle::arc_length(double phi1, double phi2) const {
  const double span = phi2 - phi1;
  constexpr double kSlack = 1e-12;
  if (!(span >= -kSlack && span <= kTwoPi + kSlack)) {
    throw DomainError("arc_length requires phi1 <= phi2 <= phi1 + 2pi");
  }
  if (span >= kTwoPi) return perimeter();
  if (span <= 0.0) return 0.0;
  double d = arc_coordinate(phi2) - arc_coordinate(phi1);
  if (d < 0.0) d += perimeter();
  return d;
}

CirclePoint UnitCircle::invert_arc_length(double start_phi, double length) const {
  constexpr double kSlack = 1e-12;
  if (!(length >= -kSlack && length <= perimeter() + kSlack)) {
    throw DomainError("arc length must lie in [0, 2 pi_p]");
  }
  if (length <= 0.0) return rho(start_phi);
  return point_at(arc_coordinate(start_phi) + length);
}

double UnitCircle::arc_distance(const CirclePoint& a, const CirclePoint& b) const {
  double d = arc_coordinate(b.phi) - arc_coordinate(a.phi);
  if (d < 0.0) d += perimeter();
  return std::min(d, perimeter() - d);
}

// ---------------------------------------------------------------------------
// Free functions

CirclePoint rho(const PExponent& p, double phi) {
  phi = reduce_angle(phi);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double n = scaled_p_sum(p.value(), c, s);
  return {phi, {c / n, s / n}};
}

Point2 r_chart(const PExponent& p, double s) {
  if (!(s >= -1.0 && s <= 1.0)) throw DomainError("r_chart requires s in [-1, 1]");
  if (p.is_infinite()) return {-s, 1.0};
  if (p.is_one()) return {-s, 1.0 - std::abs(s)};
  const double rest = 1.0 - std::pow(std::abs(s), p.value());
  return {-s, rest <= 0.0 ? 0.0 : std::pow(rest, 1.0 / p.value())};
}

double arc_speed_s(const PExponent& p, double z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("arc_speed_s requires |z| < 1");
  if (p.is_infinite()) return 1.0;
  if (p.is_one()) return 2.0;
  return smooth_speed(p.value(), z);
}

double pi_p(const PExponent& p) { return UnitCircle::shared(p)->pi(); }

double arc_length(const PExponent& p, double phi1, double phi2) {
  return UnitCircle::shared(p)->arc_length(phi1, phi2);
}

CirclePoint invert_arc_length(const PExponent& p, double start_phi, double length) {
  return UnitCircle::shared(p)->invert_arc_length(start_phi, length);
}

double arc_distance(const PExponent& p, const CirclePoint& a, const CirclePoint& b) {
  return UnitCircle::shared(p)->arc_distance(a, b);
}

}  // namespace lpevac
