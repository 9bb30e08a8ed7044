#include "cli/io.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace pony::cli {

namespace {

[[noreturn]] void schema(const std::string& what) { throw InputError(what); }

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) schema(where + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema(where + " must be finite");
  return x;
}

Point point(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema(where + " must be an [x, y] pair");
  return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where + " is missing \"" + key + "\"");
  return *it;
}

Json pair(Point p) { return Json::array({p.x, p.y}); }

Json optional_index(const std::optional<std::size_t>& idx) {
  return idx ? Json(*idx) : Json(nullptr);
}

std::optional<std::size_t> index_from(const Json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number_unsigned()) schema(where + " must be a robot index or null");
  return j.get<std::size_t>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (auto pos = detail.find(": "); pos != std::string::npos) detail = detail.substr(pos + 2);
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + detail);
  }
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.source = point(field(j, "source", "instance"), "source");
  inst.destination = point(field(j, "destination", "instance"), "destination");
  const Json& robots = field(j, "robots", "instance");
  if (!robots.is_array()) schema("robots must be an array");
  if (robots.empty()) schema("robots must be non-empty");
  for (std::size_t i = 0; i < robots.size(); ++i) {
    const std::string where = "robots[" + std::to_string(i) + "]";
    const Json& r = robots[i];
    Robot robot;
    robot.start = {number(field(r, "x", where), where + ".x"), number(field(r, "y", where), where + ".y")};
    robot.speed = number(field(r, "speed", where), where + ".speed");
    if (!(robot.speed > 0.0)) schema(where + ".speed must be positive");
    inst.robots.push_back(robot);
  }
  return inst;
}

Json instance_to_json(const Instance& instance) {
  Json robots = Json::array();
  for (const Robot& r : instance.robots) {
    robots.push_back(Json{{"x", r.start.x}, {"y", r.start.y}, {"speed", r.speed}});
  }
  return Json{{"source", pair(instance.source)},
              {"destination", pair(instance.destination)},
              {"robots", robots}};
}

Json plan_to_json(const DeliveryPlan& plan) {
  Json events = Json::array();
  for (const PlanEvent& e : plan.events) {
    events.push_back(Json{{"kind", std::string(to_string(e.kind))},
                          {"time", e.time},
                          {"location", pair(e.location)},
                          {"from", optional_index(e.from_robot)},
                          {"to", optional_index(e.to_robot)}});
  }
  Json trajectories = Json::array();
  for (const Trajectory& tr : plan.trajectories) {
    Json path = Json::array();
    for (const Waypoint& w : tr) path.push_back(Json{{"t", w.t}, {"x", w.p.x}, {"y", w.p.y}});
    trajectories.push_back(path);
  }
  return Json{{"total_time", plan.total_time}, {"events", events}, {"trajectories", trajectories}};
}

DeliveryPlan plan_from_json(const Json& j) {
  DeliveryPlan plan;
  plan.total_time = number(field(j, "total_time", "plan"), "total_time");
  const Json& events = field(j, "events", "plan");
  if (!events.is_array()) schema("events must be an array");
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string where = "events[" + std::to_string(i) + "]";
    const Json& e = events[i];
    const Json& kind = field(e, "kind", where);
    if (!kind.is_string()) schema(where + ".kind must be a string");
    auto parsed = event_kind_from_string(kind.get<std::string>());
    if (!parsed) schema(where + ".kind must be pickup, handover or deliver");
    plan.events.push_back({*parsed, number(field(e, "time", where), where + ".time"),
                           point(field(e, "location", where), where + ".location"),
                           index_from(field(e, "from", where), where + ".from"),
                           index_from(field(e, "to", where), where + ".to")});
  }
  const Json& trajectories = field(j, "trajectories", "plan");
  if (!trajectories.is_array()) schema("trajectories must be an array");
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    const Json& path = trajectories[i];
    if (!path.is_array()) schema("trajectories[" + std::to_string(i) + "] must be an array");
    Trajectory tr;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const std::string where = "trajectories[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      const Json& w = path[k];
      tr.push_back({number(field(w, "t", where), where + ".t"),
                    {number(field(w, "x", where), where + ".x"),
                     number(field(w, "y", where), where + ".y")}});
    }
    plan.trajectories.push_back(std::move(tr));
  }
  return plan;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pony::cli
