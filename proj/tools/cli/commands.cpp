#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cli/io.hpp"
#include "cli/svg.hpp"
#include "pony/error.hpp"
#include "pony/lower_bounds.hpp"
#include "pony/offline_multi.hpp"
#include "pony/offline_two.hpp"
#include "pony/online.hpp"
#include "pony/oracle.hpp"

namespace pony::cli {

namespace {

constexpr double kDefaultEpsPrime = 0.05;

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path, std::istream& in) {
  return instance_from_json(parse_json(read_source(path, in)));
}

// Offline optimum (exact for at most two robots) or a certified bracket.
Json offline_report(const Instance& inst, double eps_prime, double online_time) {
  Json j;
  const bool coincide = nearly_equal(inst.source, inst.destination);
  if (inst.robots.size() <= 2 || coincide) {
    double t = online_time;
    if (inst.robots.size() == 2 && !coincide) {
      t = std::min(solve_two(inst).plan.total_time, online_time);
    }
    j["exact"] = true;
    j["time"] = t;
    return j;
  }
  const double grid = solve_multi(inst, eps_prime).total_time;
  double reach = std::numeric_limits<double>::infinity();
  double v_max = 0.0;
  for (const Robot& r : inst.robots) {
    reach = std::min(reach, distance(r.start, inst.source) / r.speed);
    v_max = std::max(v_max, r.speed);
  }
  const double trivial = reach + distance(inst.source, inst.destination) / v_max;
  j["exact"] = false;
  j["lower"] = std::max(grid / std::sqrt(2.0) - eps_prime, trivial);
  j["upper"] = grid;
  j["eps_prime"] = eps_prime;
  return j;
}

int cmd_solve(const std::string& mode, double eps_prime, const std::string& path,
              std::istream& in, std::ostream& out) {
  const Instance inst = load_instance(path, in);
  validate(inst);
  DeliveryPlan plan;
  if (mode == "two") {
    if (inst.robots.size() != 2) throw InputError("mode two needs exactly 2 robots");
    plan = solve_two(inst).plan;
  } else {
    plan = solve_multi(inst, eps_prime);
  }
  out << dump(plan_to_json(plan));
  return kExitOk;
}

int cmd_online(double eps_prime, const std::string& path, std::istream& in, std::ostream& out) {
  const Instance inst = load_instance(path, in);
  const OnlineOutcome online = run_online(inst);
  Json j;
  j["online_time"] = online.delivery_time;
  j["winning_robot"] = online.winning_robot;
  j["per_robot_solo_time"] = online.per_robot_solo_time;
  Json offline = offline_report(inst, eps_prime, online.delivery_time);
  if (offline["exact"].get<bool>()) {
    const double t = offline["time"].get<double>();
    j["offline"] = offline;
    j["ratio"] = t > 0.0 ? online.delivery_time / t : 1.0;
  } else {
    const double lo = offline["lower"].get<double>();
    const double hi = offline["upper"].get<double>();
    j["offline"] = offline;
    j["ratio_bracket"] = Json::array({online.delivery_time / hi, online.delivery_time / lo});
  }
  out << dump(j);
  return kExitOk;
}

int cmd_adversary(int n, std::ostream& out) {
  const RelayConstruction rc = build_relay_construction(n);
  out << dump(instance_to_json(rc.instance));
  return kExitOk;
}

int cmd_lowerbound(const std::string& kind, std::size_t res, std::ostream& out) {
  Json j;
  j["kind"] = kind;
  if (kind == "speed") {
    const std::size_t r = res ? res : 256;
    const SpeedBound b = lb_speed_search(r, r, r);
    j["resolution"] = r;
    j["bound"] = b.bound;
    j["argmax"] = Json{{"v", b.argmax.v},
                       {"alpha", b.argmax.alpha.radians},
                       {"beta", b.argmax.beta.radians}};
  } else {
    const std::size_t r = res ? res : 512;
    const PositionBound b = lb_position_search(r, r);
    j["resolution"] = r;
    j["bound"] = b.bound;
    j["argmax"] = Json{{"v", b.v}, {"alpha", b.alpha}};
  }
  out << dump(j);
  return kExitOk;
}

int cmd_plot(const std::string& instance_path, const std::string& plan_path, std::istream& in,
             std::ostream& out) {
  const Instance inst = load_instance(instance_path, in);
  const DeliveryPlan plan = plan_from_json(parse_json(read_source(plan_path, in)));
  if (plan.trajectories.size() != inst.robots.size()) {
    throw InputError("plan has " + std::to_string(plan.trajectories.size()) +
                     " trajectories but the instance has " + std::to_string(inst.robots.size()) +
                     " robots");
  }
  out << render_svg(inst, plan);
  return kExitOk;
}

int cmd_oracle(std::size_t res, const std::string& path, std::istream& in, std::ostream& out) {
  const Instance inst = load_instance(path, in);
  if (inst.robots.size() != 2) throw InputError("oracle needs exactly 2 robots");
  oracle::OracleConfig cfg;
  if (res) cfg.grid_resolution = res;
  const double reference = oracle::oracle_two_robot(inst, cfg);
  const double solver = solve_two(inst).plan.total_time;
  Json j;
  j["oracle_time"] = reference;
  j["solver_time"] = solver;
  j["relative_difference"] = reference > 0.0 ? (solver - reference) / reference : solver;
  out << dump(j);
  return kExitOk;
}

int cmd_generate(std::size_t robots, std::uint64_t seed, double box, std::ostream& out) {
  if (robots == 0) throw InputError("--robots must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-box, box);
  std::uniform_real_distribution<double> speed(0.5, 2.0);
  Instance inst;
  inst.source = {coord(rng), coord(rng)};
  inst.destination = {coord(rng), coord(rng)};
  for (std::size_t i = 0; i < robots; ++i) {
    const Point p{coord(rng), coord(rng)};
    inst.robots.push_back({p, speed(rng)});
  }
  out << dump(instance_to_json(inst));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Message delivery planner for robots of different speeds", "pony"};
  app.require_subcommand(1);

  std::string mode = "two";
  double eps_prime = kDefaultEpsPrime;
  std::string file, plan_file, kind = "speed";
  int n = 3;
  std::size_t res = 0, robots = 3;
  std::uint64_t seed = 42;
  double box = 5.0;

  auto* solve = app.add_subcommand("solve", "Solve an instance and print the plan");
  solve->add_option("--mode", mode, "two (exact, 2 robots) or multi (grid)")
      ->check(CLI::IsMember({"two", "multi"}));
  solve->add_option("--eps-prime", eps_prime, "Additive overhead for the grid solver")
      ->check(CLI::PositiveNumber);
  solve->add_option("file", file, "Instance JSON, - for stdin")->required();

  auto* online = app.add_subcommand("online", "Compare the online race with the offline optimum");
  online->add_option("--eps-prime", eps_prime, "Grid overhead used for 3+ robots")
      ->check(CLI::PositiveNumber);
  online->add_option("file", file, "Instance JSON, - for stdin")->required();

  auto* adversary = app.add_subcommand("adversary", "Print the relay construction for n robots");
  adversary->add_option("--n", n, "Number of robots (>= 3)")->required();

  auto* lowerbound = app.add_subcommand("lowerbound", "Run a lower-bound sweep");
  lowerbound->add_option("--kind", kind, "speed or position")
      ->check(CLI::IsMember({"speed", "position"}));
  lowerbound->add_option("--res", res, "Grid resolution per axis (>= 64)")
      ->check(CLI::Range(std::size_t{64}, std::size_t{1} << 16));

  auto* plot = app.add_subcommand("plot", "Render an instance and plan as SVG");
  plot->add_option("file", file, "Instance JSON")->required();
  plot->add_option("plan", plan_file, "Plan JSON")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force two-robot optimum");
  oracle_cmd->add_option("--res", res, "Oracle grid resolution (>= 100)")
      ->check(CLI::Range(std::size_t{100}, std::size_t{1} << 14));
  oracle_cmd->add_option("file", file, "Instance JSON, - for stdin")->required();

  auto* generate = app.add_subcommand("generate", "Print a random instance");
  generate->add_option("--robots", robots, "Number of robots");
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--box", box, "Coordinates are drawn from [-box, box]")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(mode, eps_prime, file, in, out);
    if (online->parsed()) return cmd_online(eps_prime, file, in, out);
    if (adversary->parsed()) return cmd_adversary(n, out);
    if (lowerbound->parsed()) return cmd_lowerbound(kind, res, out);
    if (plot->parsed()) return cmd_plot(file, plan_file, in, out);
    if (oracle_cmd->parsed()) return cmd_oracle(res, file, in, out);
    if (generate->parsed()) return cmd_generate(robots, seed, box, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GridTooLargeError& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitResource;
  } catch (const PonyError& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return e.code() == ErrorCode::kInvalidInput ? kExitInput : kExitSolver;
  }
  return kExitInput;
}

}  // namespace pony::cli
