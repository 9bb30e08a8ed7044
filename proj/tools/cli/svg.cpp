#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "pony/error.hpp"
#include "pony/geometry.hpp"

namespace pony::cli {

namespace {

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::optional<Circle> meeting_circle(const Instance& instance, const DeliveryPlan& plan) {
  if (instance.robots.size() != 2 || plan.trajectories.size() != 2) return std::nullopt;
  const auto& r = instance.robots;
  if (std::abs(r[0].speed - r[1].speed) <= kSpeedTolerance * std::max(r[0].speed, r[1].speed)) {
    return std::nullopt;
  }
  const std::size_t fast = r[1].speed > r[0].speed ? 1 : 0;
  auto pickup = std::find_if(plan.events.begin(), plan.events.end(),
                             [](const PlanEvent& e) { return e.kind == EventKind::kPickup; });
  if (pickup == plan.events.end()) return std::nullopt;
  const Point k = position_at(plan.trajectories[fast], pickup->time);
  try {
    return apollonius_circle(k, instance.source, r[fast].speed / r[1 - fast].speed);
  } catch (const PonyError&) {
    return std::nullopt;
  }
}

struct Box {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  bool empty = true;

  void add(Point p) {
    if (empty) {
      x_lo = x_hi = p.x;
      y_lo = y_hi = p.y;
      empty = false;
      return;
    }
    x_lo = std::min(x_lo, p.x);
    x_hi = std::max(x_hi, p.x);
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
};

}  // namespace

std::string render_svg(const Instance& instance, const DeliveryPlan& plan) {
  const auto circle = meeting_circle(instance, plan);

  Box box;
  box.add(instance.source);
  box.add(instance.destination);
  for (const Robot& r : instance.robots) box.add(r.start);
  for (const Trajectory& tr : plan.trajectories)
    for (const Waypoint& w : tr) box.add(w.p);
  if (circle) {
    box.add(circle->center - Point{circle->radius, circle->radius});
    box.add(circle->center + Point{circle->radius, circle->radius});
  }
  const double extent = std::max({box.x_hi - box.x_lo, box.y_hi - box.y_lo, 1e-6});
  const double margin = 0.1 * extent;
  const double unit = extent / 100.0;  // marker and stroke scale

  std::ostringstream os;
  os.precision(9);
  // SVG y grows downward, so world y is negated.
  auto xy = [&](Point p) {
    std::ostringstream s;
    s.precision(9);
    s << p.x << ',' << -p.y;
    return s.str();
  };
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << box.x_lo - margin << ' '
     << -(box.y_hi + margin) << ' ' << box.x_hi - box.x_lo + 2 * margin << ' '
     << box.y_hi - box.y_lo + 2 * margin << "\" width=\"800\" height=\"800\">\n";
  os << "  <rect class=\"background\" x=\"" << box.x_lo - margin << "\" y=\""
     << -(box.y_hi + margin) << "\" width=\"" << box.x_hi - box.x_lo + 2 * margin
     << "\" height=\"" << box.y_hi - box.y_lo + 2 * margin << "\" fill=\"white\"/>\n";

  if (circle) {
    os << "  <circle class=\"apollonius\" cx=\"" << circle->center.x << "\" cy=\""
       << -circle->center.y << "\" r=\"" << circle->radius
       << "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"" << unit << ' ' << unit
       << "\" stroke-width=\"" << 0.3 * unit << "\"/>\n";
  }

  for (std::size_t i = 0; i < plan.trajectories.size(); ++i) {
    const Trajectory& tr = plan.trajectories[i];
    const bool moves = std::any_of(tr.begin(), tr.end(),
                                   [&](const Waypoint& w) { return !(w.p == tr.front().p); });
    if (!moves) continue;
    os << "  <polyline class=\"trajectory\" data-robot=\"" << i << "\" fill=\"none\" stroke=\""
       << kColors[i % 8] << "\" stroke-width=\"" << 0.5 * unit << "\" points=\"";
    for (std::size_t k = 0; k < tr.size(); ++k) os << (k ? " " : "") << xy(tr[k].p);
    os << "\"/>\n";
  }

  for (std::size_t i = 0; i < instance.robots.size(); ++i) {
    const Point p = instance.robots[i].start;
    os << "  <circle class=\"robot\" data-robot=\"" << i << "\" cx=\"" << p.x << "\" cy=\""
       << -p.y << "\" r=\"" << 1.2 * unit << "\" fill=\"" << kColors[i % 8] << "\"/>\n";
  }

  for (const PlanEvent& e : plan.events) {
    if (e.kind != EventKind::kHandover) continue;
    const Point p = e.location;
    const double h = 1.5 * unit;
    os << "  <polygon class=\"handover\" points=\"" << xy(p + Point{0, h}) << ' '
       << xy(p + Point{h, 0}) << ' ' << xy(p - Point{0, h}) << ' ' << xy(p - Point{h, 0})
       << "\" fill=\"#000000\"/>\n";
  }

  auto marker = [&](Point p, const char* label, const char* cls) {
    const double h = 1.5 * unit;
    os << "  <rect class=\"" << cls << "\" x=\"" << p.x - h << "\" y=\"" << -p.y - h
       << "\" width=\"" << 2 * h << "\" height=\"" << 2 * h
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << 0.4 * unit << "\"/>\n";
    os << "  <text x=\"" << p.x + 2 * h << "\" y=\"" << -p.y - 2 * h << "\" font-size=\""
       << 4 * unit << "\">" << label << "</text>\n";
  };
  marker(instance.source, "S", "source");
  marker(instance.destination, "D", "destination");
  os << "</svg>\n";
  return os.str();
}

}  // namespace pony::cli
