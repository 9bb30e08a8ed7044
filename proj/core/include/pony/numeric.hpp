#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>

namespace pony::numeric {

inline constexpr double kInvPhi = 0.6180339887498949;  // 1 / golden ratio

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for a minimum of f on [lo, hi]; stops when the
/// bracket is narrower than `width` or after `max_iterations`. Ties keep the
/// left sub-bracket, so a one-sided cliff (f = +inf) is approached from the
/// finite side.
template <class F>
Extremum golden_minimize(F&& f, double lo, double hi, double width,
                         int max_iterations = 200) {
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iterations && (b - a) > width; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

template <class F>
Extremum golden_maximize(F&& f, double lo, double hi, double width,
                         int max_iterations = 200) {
  auto r = golden_minimize([&](double x) { return -f(x); }, lo, hi, width,
                           max_iterations);
  return {r.x, -r.value};
}

/// Bisection on a bracketed sign change of g over [lo, hi]. Returns nullopt
/// when g(lo) and g(hi) have the same strict sign.
template <class G>
std::optional<double> bisect_root(G&& g, double lo, double hi, double x_tol,
                                  double f_tol, int max_iterations = 200) {
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo < 0.0) == (ghi < 0.0)) return std::nullopt;
  for (int it = 0; it < max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::abs(gm) <= f_tol || (hi - lo) <= x_tol) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Uniform scan of f on `samples` points of [lo, hi] (endpoints included)
/// followed by golden refinement around the best sample.
template <class F>
Extremum scan_then_refine_min(F&& f, double lo, double hi, std::size_t samples,
                              double width) {
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  std::size_t best = 0;
  double best_value = f(lo);
  for (std::size_t i = 1; i < samples; ++i) {
    const double v = f(lo + step * static_cast<double>(i));
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double a = lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
  const double b = lo + step * static_cast<double>(best + 1 >= samples ? samples - 1 : best + 1);
  auto refined = golden_minimize(f, a, b, width);
  if (refined.value < best_value) return refined;
  return {lo + step * static_cast<double>(best), best_value};
}

}  // namespace pony::numeric
