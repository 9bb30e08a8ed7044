#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pony/plan.hpp"

namespace pony::cli {

using Json = nlohmann::ordered_json;

// Malformed or schema-violating input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses JSON text; syntax errors are reported as "line L, column C: ...".
Json parse_json(std::string_view text);

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& instance);

DeliveryPlan plan_from_json(const Json& j);
Json plan_to_json(const DeliveryPlan& plan);

/// Canonical text: two-space indent, shortest round-trip numbers, trailing
/// newline.
std::string dump(const Json& j);

}  // namespace pony::cli
