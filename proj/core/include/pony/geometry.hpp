#pragma once

#include <cmath>
#include <numbers>

namespace pony {

// Speeds within this band of 1 are treated as equal.
inline constexpr double kSpeedTolerance = 1e-9;
// Per-coordinate tolerance for degeneracy detection only.
inline constexpr double kPointTolerance = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Degeneracy test, never used inside numeric kernels.
inline bool nearly_equal(Point a, Point b, double tol = kPointTolerance) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

/// Angle in radians.
struct Angle {
  double radians = 0.0;

  /// Representative in (-pi, pi].
  Angle normalized() const;
  /// Representative in [0, 2pi).
  Angle positive() const;
  double cos() const { return std::cos(radians); }
  double sin() const { return std::sin(radians); }
};

struct Circle {
  Point center;
  double radius = 0.0;

  Point at(double theta) const {
    return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
  }
};

double distance(Point a, Point b);

/// Signed angle from direction u to direction v, in (-pi, pi].
double signed_angle(Point u, Point v);

/// Unsigned angle at vertex b of the path a-b-c, in [0, pi].
double vertex_angle(Point a, Point b, Point c);

Point rotate_about(Point p, Point center, Angle theta);

/// Reflection of p across the line through a and b.
Point reflect_across(Point p, Point a, Point b);

/// Locus of points P with |PK| / |PS| = v, for v > 1. The circle encloses S.
/// Throws DegenerateSpeed when v <= 1 + kSpeedTolerance and CoincidentPoints
/// when K and S coincide.
Circle apollonius_circle(Point k, Point s, double v);

/// Point M on `circle` minimizing |KM| + |MD|. At M the ray from the center
/// through M bisects the angle DMK. K and D must lie outside the circle.
Point bisector_meeting_point(const Circle& circle, Point k, Point d, double v);

/// Difference of the angles DMC and CMK at M, in radians. Zero exactly when
/// the ray from the center C through M bisects the angle DMK.
double bisection_residual(const Circle& circle, Point m, Point k, Point d);

}  // namespace pony
