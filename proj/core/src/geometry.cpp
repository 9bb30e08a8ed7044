#include "pony/geometry.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "pony/error.hpp"
#include "pony/numeric.hpp"

namespace pony {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kBisectorScanSamples = 256;
constexpr std::size_t kBisectorFallbackSamples = 4096;
constexpr double kBisectorAngleTol = 1e-13;

Point unit(Point p) {
  const double n = norm(p);
  return n > 0.0 ? p / n : Point{};
}

}  // namespace

Angle Angle::normalized() const {
  double r = std::remainder(radians, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  return Angle{r};
}

Angle Angle::positive() const {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return Angle{r};
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double signed_angle(Point u, Point v) {
  return Angle{std::atan2(cross(u, v), dot(u, v))}.normalized().radians;
}

double vertex_angle(Point a, Point b, Point c) {
  return std::abs(signed_angle(a - b, c - b));
}

Point rotate_about(Point p, Point center, Angle theta) {
  const double c = theta.cos();
  const double s = theta.sin();
  const Point d = p - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

Point reflect_across(Point p, Point a, Point b) {
  const Point dir = unit(b - a);
  const Point rel = p - a;
  const Point along = dot(rel, dir) * dir;
  return a + 2.0 * along - rel;
}

Circle apollonius_circle(Point k, Point s, double v) {
  if (!(v > 1.0 + kSpeedTolerance)) {
    throw PonyError(ErrorCode::kDegenerateSpeed,
                    "speed ratio must exceed 1 for an Apollonius circle, got " +
                        std::to_string(v));
  }
  if (nearly_equal(k, s)) {
    throw PonyError(ErrorCode::kCoincidentPoints,
                    "Apollonius circle undefined for coincident points");
  }
  const double denom = v * v - 1.0;
  return Circle{s + (s - k) / denom, v * distance(s, k) / denom};
}

double bisection_residual(const Circle& circle, Point m, Point k, Point d) {
  const Point to_center = circle.center - m;
  const double dmc = std::abs(signed_angle(d - m, to_center));
  const double cmk = std::abs(signed_angle(to_center, k - m));
  return dmc - cmk;
}

Point bisector_meeting_point(const Circle& circle, Point k, Point d, double v) {
  if (!(v > 1.0)) {
    throw PonyError(ErrorCode::kDegenerateSpeed, "bisector meeting point needs v > 1");
  }
  auto objective = [&](double theta) {
    const Point m = circle.at(theta);
    return distance(k, m) + distance(m, d);
  };
  // Derivative of the objective along the circle, up to the positive factor R.
  auto slope = [&](double theta) {
    const Point m = circle.at(theta);
    const Point tangent{-std::sin(theta), std::cos(theta)};
    return dot(unit(m - k) + unit(m - d), tangent);
  };

  for (std::size_t samples : {kBisectorScanSamples, kBisectorFallbackSamples}) {
    const double step = kTwoPi / static_cast<double>(samples);
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
      const double val = objective(step * static_cast<double>(i));
      if (val < best_value) {
        best_value = val;
        best = i;
      }
    }
    const double center = step * static_cast<double>(best);
    auto root = numeric::bisect_root(slope, center - step, center + step,
                                     kBisectorAngleTol, 0.0);
    if (root) return circle.at(*root);
  }
  throw PonyError(ErrorCode::kNoRoot,
                  "no sign change of the bisection residual around the circle");
}

}  // namespace pony
