#pragma once

#include <optional>

namespace cvent {

/// -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
[[nodiscard]] double binary_entropy(double x);

/// Convex-roof extended negativity >= -Tr(rho W) at mu = (0, 1).
[[nodiscard]] double cren_lower_bound(double witness_value01);

/// Concurrence >= -Tr(rho V).
[[nodiscard]] double concurrence_lower_bound(double swap_value);

/// Entanglement of formation (bits) >= H2((1 + sqrt(1 - Tr(rho V)^2)) / 2) when Tr(rho V) < 0.
[[nodiscard]] double eof_lower_bound(double swap_value);

/// Tangle >= Tr(rho V)^2 when Tr(rho V) < 0.
[[nodiscard]] double tangle_lower_bound(double swap_value);

struct BoundReport {
  double cren_lower = 0.0;
  double concurrence_lower = 0.0;
  double eof_lower = 0.0;
  double tangle_lower = 0.0;
  std::optional<double> witness_value01;
  std::optional<double> swap_value;
};

/// Bounds whose input is missing are reported as 0.
[[nodiscard]] BoundReport make_bound_report(std::optional<double> witness_value01,
                                            std::optional<double> swap_value);

}  // namespace cvent
