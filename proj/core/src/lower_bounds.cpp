#include "pony/lower_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "pony/error.hpp"
#include "pony/numeric.hpp"
#include "pony/parallel.hpp"

namespace pony {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kRefineWidth = 1e-10;

// Square root that tolerates round-off just below zero.
double root(double x) {
  if (x < -1e-12) {
    throw PonyError(ErrorCode::kGeometryInfeasible, "negative square-root argument");
  }
  return std::sqrt(std::max(0.0, x));
}

// Distance between points given in polar form about the same center.
double polar_distance(double r1, double a1, double r2, double a2) {
  return std::sqrt(std::max(0.0, r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(a1 - a2)));
}

struct SpeedFrame {
  double k, s, r, d;  // radii of K, S, the circle, D
  double sd, km;
};

SpeedFrame speed_frame(double v, double alpha) {
  const double q = v * v - 1.0;
  SpeedFrame f{v * v / q, 1.0 / q, v / q, v * v / q, 0.0, 0.0};
  f.sd = polar_distance(f.s, 0.0, f.d, 2.0 * alpha);
  f.km = polar_distance(f.k, 0.0, f.r, alpha);
  return f;
}

// i-th of `count` points of (lo, hi], right end included.
double sample(double lo, double hi, std::size_t i, std::size_t count) {
  return lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(count);
}

double cell_center(double lo, double hi, std::size_t i, std::size_t count) {
  return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
}

// Online player's best reply at a fixed placement.
numeric::Extremum best_reply(double v, double alpha, std::size_t grid_beta) {
  auto worst = [&](double beta) {
    return lb_speed_ratio({v, Angle{alpha}, Angle{beta}}).worst();
  };
  return numeric::scan_then_refine_min(worst, 0.0, kHalfPi, std::max<std::size_t>(grid_beta, 2),
                                       kRefineWidth);
}

double placement_value(double v, double alpha, std::size_t grid_beta) {
  if (!(v > 1.0) || alpha <= 0.0 || alpha >= kHalfPi) return kNegInf;
  if (!lb_speed_admissible(v, alpha)) return kNegInf;
  return best_reply(v, alpha, grid_beta).value;
}

struct Cell {
  double value = kNegInf;
  std::size_t i = 0, j = 0;
};

// Larger value wins; equal values go to the lexicographically smaller cell.
bool better(const Cell& a, const Cell& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

template <class F>
Cell scan_grid(std::size_t rows, std::size_t cols, F&& value) {
  std::vector<Cell> per_row(rows);
  parallel_for(rows, [&](std::size_t i) {
    Cell best;
    best.i = i;
    for (std::size_t j = 0; j < cols; ++j) {
      const Cell c{value(i, j), i, j};
      if (better(c, best)) best = c;
    }
    per_row[i] = best;
  });
  Cell best = per_row.front();
  for (const Cell& c : per_row) {
    if (better(c, best)) best = c;
  }
  return best;
}

}  // namespace

SpeedRatios lb_speed_ratio(const AdversaryConfig& config) {
  const double v = config.v;
  const double alpha = config.alpha.radians;
  const double beta = config.beta.radians;
  const SpeedFrame f = speed_frame(v, alpha);
  const double kx = polar_distance(f.k, 0.0, f.r, beta);
  const double xd = polar_distance(f.r, beta, f.d, 2.0 * alpha);
  SpeedRatios out;
  out.speed1 = (kx + xd) / v / std::min(f.sd, 2.0 * f.km / v);
  out.speed0 = (kx * (1.0 + 1.0 / v) + f.sd) / (1.0 + f.sd);
  return out;
}

bool lb_speed_admissible(double v, double alpha) {
  const SpeedFrame f = speed_frame(v, alpha);
  return v * f.sd > 1.0 + f.sd && 2.0 * f.km / v <= f.sd;
}

SpeedBound lb_speed_search(const SpeedSearchOptions& o) {
  const std::size_t gv = std::max<std::size_t>(o.grid_v, 1);
  const std::size_t ga = std::max<std::size_t>(o.grid_alpha, 1);
  auto v_at = [&](std::size_t i) { return sample(o.v_min, o.v_max, i, gv); };
  auto a_at = [&](std::size_t j) { return cell_center(0.0, kHalfPi, j, ga); };

  const Cell cell = scan_grid(gv, ga, [&](std::size_t i, std::size_t j) {
    return placement_value(v_at(i), a_at(j), o.grid_beta);
  });

  SpeedBound out;
  double v = v_at(cell.i);
  double alpha = a_at(cell.j);
  out.bound = cell.value;
  if (o.refine && std::isfinite(cell.value)) {
    const double hv = (o.v_max - o.v_min) / static_cast<double>(gv);
    const double ha = kHalfPi / static_cast<double>(ga);
    auto best_alpha = [&](double vv) {
      return numeric::golden_maximize(
          [&](double a) { return placement_value(vv, a, o.grid_beta); },
          std::max(alpha - ha, 0.0), std::min(alpha + ha, kHalfPi), kRefineWidth);
    };
    const auto rv = numeric::golden_maximize(
        [&](double vv) { return best_alpha(vv).value; }, std::max(v - hv, o.v_min),
        std::min(v + hv, o.v_max), kRefineWidth, 80);
    const auto ra = best_alpha(rv.x);
    if (ra.value > out.bound) {
      out.bound = ra.value;
      v = rv.x;
      alpha = ra.x;
    }
  }
  out.argmax.v = v;
  out.argmax.alpha = Angle{alpha};
  out.argmax.beta = Angle{std::isfinite(out.bound) ? best_reply(v, alpha, o.grid_beta).x : 0.0};
  return out;
}

SpeedBound lb_speed_search(std::size_t grid_v, std::size_t grid_alpha, std::size_t grid_beta) {
  SpeedSearchOptions o;
  o.grid_v = grid_v;
  o.grid_alpha = grid_alpha;
  o.grid_beta = grid_beta;
  return lb_speed_search(o);
}

PositionGeometry lb_position_geometry(double v, double alpha) {
  const double q = v * v - 1.0;
  // Work about C1 first, then move S to the origin and D onto the x axis.
  const Point c{0.0, 0.0};
  const Point s{1.0 / q, 0.0};
  const Point k1{v * v / q, 0.0};
  const Point d = (v * v / q) * Point{std::cos(2 * alpha), std::sin(2 * alpha)};
  const Point m1 = (v / q) * Point{std::cos(alpha), std::sin(alpha)};
  const double turn = -std::atan2(d.y - s.y, d.x - s.x);
  auto place = [&](Point p) { return rotate_about(p - s, Point{}, Angle{turn}); };

  PositionGeometry g;
  g.s = Point{};
  g.d = place(d);
  g.d.y = 0.0;
  g.c1 = place(c);
  g.k1 = place(k1);
  g.m1 = place(m1);
  g.radius = v / q;
  g.x1 = Point{g.c1.x, 0.0};
  g.x = Point{g.c1.x + root(g.radius * g.radius - g.c1.y * g.c1.y), 0.0};
  g.c2 = reflect_across(g.c1, g.s, g.d);
  g.k2 = reflect_across(g.k1, g.s, g.d);
  g.m2 = reflect_across(g.m1, g.s, g.d);
  return g;
}

double lb_position_ratio(double v, double alpha) {
  const double q = v * v - 1.0;
  const double sd = root(1.0 + v * v * v * v - 2.0 * v * v * std::cos(2.0 * alpha)) / q;
  const double km = v / q * root(1.0 + v * v - 2.0 * v * std::cos(alpha));
  const double sc = 1.0 / q;
  const double cd = v * v / q;
  const double cx = v / q;
  const double sin_beta = cd * std::sin(2.0 * alpha) / sd;
  const double xc = sc * sin_beta;
  const double sx1 = root(sc * sc - xc * xc);
  const double x1x = root(cx * cx - xc * xc);
  const bool acute_at_s = cd * cd <= sd * sd + sc * sc;
  const double sx = acute_at_s ? sx1 + x1x : x1x - sx1;
  return (sx * (v - 1.0) + sd) / (2.0 * km);
}

PositionBound lb_position_search(const PositionSearchOptions& o) {
  const std::size_t gv = std::max<std::size_t>(o.grid_v, 1);
  const std::size_t ga = std::max<std::size_t>(o.grid_alpha, 1);
  auto v_at = [&](std::size_t i) { return sample(o.v_min, o.v_max, i, gv); };
  auto a_at = [&](std::size_t j) { return cell_center(0.0, kHalfPi, j, ga); };
  auto value = [](double v, double a) {
    if (!(v > 1.0) || a <= 0.0 || a >= kHalfPi) return kNegInf;
    try {
      return lb_position_ratio(v, a);
    } catch (const PonyError&) {
      return kNegInf;
    }
  };

  const Cell cell = scan_grid(gv, ga, [&](std::size_t i, std::size_t j) {
    return value(v_at(i), a_at(j));
  });
  PositionBound out{cell.value, v_at(cell.i), a_at(cell.j)};
  if (o.refine && std::isfinite(cell.value)) {
    const double hv = (o.v_max - o.v_min) / static_cast<double>(gv);
    const double ha = kHalfPi / static_cast<double>(ga);
    const double a0 = out.alpha;
    auto best_alpha = [&](double vv) {
      return numeric::golden_maximize([&](double a) { return value(vv, a); },
                                      std::max(a0 - ha, 0.0), std::min(a0 + ha, kHalfPi),
                                      kRefineWidth);
    };
    const auto rv = numeric::golden_maximize([&](double vv) { return best_alpha(vv).value; },
                                             std::max(out.v - hv, o.v_min),
                                             std::min(out.v + hv, o.v_max), kRefineWidth);
    const auto ra = best_alpha(rv.x);
    if (ra.value > out.bound) out = {ra.value, rv.x, ra.x};
  }
  return out;
}

PositionBound lb_position_search(std::size_t grid_v, std::size_t grid_alpha) {
  PositionSearchOptions o;
  o.grid_v = grid_v;
  o.grid_alpha = grid_alpha;
  return lb_position_search(o);
}

}  // namespace pony
