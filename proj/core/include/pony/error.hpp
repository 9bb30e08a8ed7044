#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pony {

enum class ErrorCode {
  kDegenerateSpeed,
  kCoincidentPoints,
  kNoRoot,
  kDegenerateInstance,
  kUnreachable,
  kGridTooLarge,
  kInvalidN,
  kGeometryInfeasible,
  kTooLarge,
  kInvalidInput,
};

std::string_view error_name(ErrorCode code) noexcept;

// All library failures surface as PonyError; callers switch on code().
class PonyError : public std::runtime_error {
 public:
  PonyError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

// Raised by build_grid when the lattice would exceed the size guard.
class GridTooLargeError : public PonyError {
 public:
  GridTooLargeError(const std::string& what, double min_eps_prime)
      : PonyError(ErrorCode::kGridTooLarge, what),
        min_eps_prime_(min_eps_prime) {}

  double min_eps_prime() const noexcept { return min_eps_prime_; }

 private:
  double min_eps_prime_;
};

inline std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDegenerateSpeed: return "DegenerateSpeed";
    case ErrorCode::kCoincidentPoints: return "CoincidentPoints";
    case ErrorCode::kNoRoot: return "NoRoot";
    case ErrorCode::kDegenerateInstance: return "DegenerateInstance";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kGridTooLarge: return "GridTooLarge";
    case ErrorCode::kInvalidN: return "InvalidN";
    case ErrorCode::kGeometryInfeasible: return "GeometryInfeasible";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace pony
