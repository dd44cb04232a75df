#ifndef LPEVAC_LP_GEOMETRY_HPP
#define LPEVAC_LP_GEOMETRY_HPP

#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpevac {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The norm exponent p in [1, inf], with infinity as its own case.
class PExponent {
 public:
  /// Throws DomainError unless p >= 1. Passing +inf yields infinity().
  static PExponent finite(double p);
  static PExponent infinity() { return PExponent(kInf); }

  bool is_infinite() const noexcept { return value_ == kInf; }
  bool is_one() const noexcept { return value_ == 1.0; }
  /// Finite and strictly greater than one: the case with a smooth, curved circle.
  bool is_smooth() const noexcept { return !is_infinite() && value_ > 1.0; }
  /// The exponent; +inf for the infinity case.
  double value() const noexcept { return value_; }
  /// 1/p, zero for infinity.
  double reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / value_; }
  /// Conjugate exponent q with 1/p + 1/q = 1.
  PExponent conjugate() const;

  std::string to_string() const;

  friend bool operator==(const PExponent& a, const PExponent& b) noexcept {
    return a.value_ == b.value_;
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  explicit PExponent(double v) : value_(v) {}
  double value_;
};

/// Finite p above this threshold is supported but loses precision.
inline constexpr double kLargePThreshold = 50.0;
bool large_p_warning(const PExponent& p);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

/// A point of the unit circle together with its angle parameter in [0, 2pi).
struct CirclePoint {
  double phi = 0.0;
  Point2 point;
};

/// Counter-clockwise arc starting at rho(start_phi) with l_p length `length`.
struct ArcSpec {
  PExponent p;
  double start_phi = 0.0;
  double length = 0.0;
};

/// Reduces an angle into [0, 2pi).
double reduce_angle(double phi);

/// (|x|^p + |y|^p)^(1/p), max(|x|, |y|) for infinity.
double norm_p(const PExponent& p, Point2 v);

/// l_p distance |a - b|_p.
double chord_length(const PExponent& p, Point2 a, Point2 b);

/// The l_p unit circle for one fixed p.
///
/// Arc lengths are measured with a global coordinate: the counter-clockwise
/// distance from (1, 0), in [0, 2 pi_p). Everything reduces to the octant
/// between (0, 1) and the diagonal point (c, c), c = 2^(-1/p), where the chart
/// z -> (z, (1 - z^p)^(1/p)) is smooth and its speed is bounded by 2^(1/p).
/// The octant arc length is tabulated on panels at construction; each panel
/// carries an adaptive quadrature value and is refined until a 20-point
/// Gauss-Legendre rule is accurate on every sub-interval of it.
///
/// p = 1 and p = infinity use exact piecewise-linear formulas.
class UnitCircle {
 public:
  explicit UnitCircle(const PExponent& p);

  /// Shared, immutable instance for p. Safe to call from many threads.
  static std::shared_ptr<const UnitCircle> shared(const PExponent& p);

  const PExponent& p() const noexcept { return p_; }
  /// Half the perimeter.
  double pi() const noexcept { return pi_; }
  double perimeter() const noexcept { return 2.0 * pi_; }
  /// c = 2^(-1/p), the coordinate of the diagonal point.
  double diagonal() const noexcept { return diagonal_; }

  /// Larger coordinate of the circle point whose smaller coordinate is z >= 0.
  double companion(double z) const;
  /// |r_p'(z)|_p for the upper chart; z in [0, 1).
  double chart_speed(double z) const;
  /// Arc length from (0, 1) to (z, companion(z)) for z in [0, c].
  double octant_arc(double z) const;
  /// Inverse of octant_arc on [0, pi_p / 4].
  double octant_arc_inverse(double length) const;
  /// Integral of chart_speed over [0, z] for z in [0, 1], evaluated without
  /// touching the singular end by folding across y = x.
  double chart_arc(double z) const;

  CirclePoint rho(double phi) const;
  /// Global arc coordinate of rho(phi).
  double arc_coordinate(double phi) const;
  /// Circle point at global arc coordinate `s` (any real; wrapped).
  CirclePoint point_at(double s) const;

  /// Counter-clockwise arc length from rho(phi1) to rho(phi2); requires
  /// phi1 <= phi2 <= phi1 + 2pi.
  double arc_length(double phi1, double phi2) const;
  /// Point reached from rho(start_phi) after counter-clockwise length L in [0, 2 pi_p].
  CirclePoint invert_arc_length(double start_phi, double length) const;
  /// Shorter of the two arcs between a and b; in [0, pi_p].
  double arc_distance(const CirclePoint& a, const CirclePoint& b) const;

 private:
  struct Panel {
    double lo;
    double hi;
    double before;  // octant arc length up to lo
    double value;   // octant arc length over [lo, hi]
  };

  void build_panels();
  std::size_t panel_index(double z) const;
  std::size_t panel_index_by_length(double length) const;
  double panel_partial(const Panel& panel, double z) const;

  PExponent p_;
  double pi_ = 4.0;
  double diagonal_ = 1.0;
  std::vector<Panel> panels_;
};

/// rho_p(phi) = (cos phi, sin phi) / N_p(phi).
CirclePoint rho(const PExponent& p, double phi);
/// r_p(s) = (-s, (1 - |s|^p)^(1/p)) for s in [-1, 1]; (-s, 1) for infinity.
Point2 r_chart(const PExponent& p, double s);
/// |r_p'(z)|_p = (z^(p^2-p) (1 - z^p)^(1-p) + 1)^(1/p); 2 for p = 1.
double arc_speed_s(const PExponent& p, double z);
double pi_p(const PExponent& p);
double arc_length(const PExponent& p, double phi1, double phi2);
CirclePoint invert_arc_length(const PExponent& p, double start_phi, double length);
double arc_distance(const PExponent& p, const CirclePoint& a, const CirclePoint& b);

}  // namespace lpevac

#endif  // LPEVAC_LP_GEOMETRY_HPP
