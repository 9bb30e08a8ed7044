#pragma once

#include <cstddef>
#include <vector>

#include "pony/geometry.hpp"
#include "pony/graph_delivery.hpp"
#include "pony/plan.hpp"

namespace pony {

inline constexpr std::size_t kMaxGridSide = 4000;

struct RectilinearLegs {
  double x_leg = 0.0;
  double y_leg = 0.0;
  double total() const { return x_leg + y_leg; }
};

/// Axis-aligned legs of the L-path from a to p. Their sum is at most
/// sqrt(2) * |ap|.
RectilinearLegs rectilinear_detour_bound(Point a, Point p);

// Square lattice laid along SD. The grid frame has S at the origin and D on
// the positive x axis; lattice vertex (c, r) sits at frame point
// ((c + col_offset) * epsilon, (r + row_offset) * epsilon). Times stored here
// are normalized so the slowest robot has speed 1.
struct GridModel {
  double epsilon = 0.0;
  double delta = 0.0;
  Point origin;          // world position of vertex (0, 0)
  double angle = 0.0;    // direction of the grid x axis in the world
  Point anchor;          // world position of S
  std::size_t cols = 0;
  std::size_t rows = 0;
  long col_offset = 0;
  long row_offset = 0;
  std::size_t source_vertex = 0;
  std::size_t dest_vertex = 0;
  double speed_scale = 1.0;            // slowest real speed
  std::vector<double> speeds;          // real speed / speed_scale
  std::vector<std::size_t> snapped_starts;
  std::vector<double> snap_time;       // travel time to the snapped vertex
  std::vector<double> snap_wait;       // release_time - snap_time
  double release_time = 0.0;           // common start of the graph phase

  std::size_t vertex(std::size_t col, std::size_t row) const { return row * cols + col; }
  std::size_t col_of(std::size_t v) const { return v % cols; }
  std::size_t row_of(std::size_t v) const { return v / cols; }
  Point frame_point(std::size_t v) const;
  Point world_point(std::size_t v) const;
  Point to_frame(Point world) const;
  Point to_world(Point frame) const;
};

/// Builds the lattice for additive overhead `eps_prime` (in the instance's
/// time units). Throws DegenerateInstance when S = D, InvalidInput for a
/// non-positive eps_prime and GridTooLargeError when the square would need
/// more than kMaxGridSide cells per side.
GridModel build_grid(const Instance& instance, double eps_prime);

struct MultiRobotSolution {
  GridModel grid;
  GraphDeliveryResult phase2;  // normalized times
  DeliveryPlan plan;           // real times, world coordinates
};

MultiRobotSolution solve_multi_detailed(const Instance& instance, double eps_prime);

/// Grid plan whose time is at most sqrt(2) times the optimum plus eps_prime.
DeliveryPlan solve_multi(const Instance& instance, double eps_prime);

}  // namespace pony
