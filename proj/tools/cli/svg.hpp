#pragma once

#include <string>

#include "pony/plan.hpp"

namespace pony::cli {

/// Standalone SVG of an instance and a plan. Two-robot plans with distinct
/// speeds get the Apollonius circle of the fast robot's position at pickup.
std::string render_svg(const Instance& instance, const DeliveryPlan& plan);

}  // namespace pony::cli
