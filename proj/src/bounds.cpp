#include "cvent/bounds.hpp"

#include "cvent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cvent {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("binary_entropy: argument outside [0, 1]");
  auto term = [](double t) { return t > 0.0 ? -t * std::log2(t) : 0.0; };
  return term(x) + term(1.0 - x);
}

double cren_lower_bound(double witness_value01) { return std::max(0.0, -witness_value01); }

double concurrence_lower_bound(double swap_value) { return std::max(0.0, -swap_value); }

double eof_lower_bound(double swap_value) {
  if (std::abs(swap_value) > 1.0 + 1e-9) {
    throw InvalidArgument("eof_lower_bound: |Tr(rho V)| = " + std::to_string(std::abs(swap_value)) +
                          " exceeds 1");
  }
  if (swap_value >= 0.0) return 0.0;
  const double c = std::min(-swap_value, 1.0);
  // H2 is symmetric; evaluate at the small root y = (1 - sqrt(1 - c^2))/2 without cancellation
  const double y = 0.5 * c * c / (1.0 + std::sqrt(1.0 - c * c));
  if (y <= 0.0) return 0.0;
  return -y * std::log2(y) - (1.0 - y) * std::log1p(-y) / std::log(2.0);
}

double tangle_lower_bound(double swap_value) { return swap_value < 0.0 ? swap_value * swap_value : 0.0; }

BoundReport make_bound_report(std::optional<double> witness_value01, std::optional<double> swap_value) {
  BoundReport r;
  r.witness_value01 = witness_value01;
  r.swap_value = swap_value;
  if (witness_value01) r.cren_lower = cren_lower_bound(*witness_value01);
  if (swap_value) {
    r.concurrence_lower = concurrence_lower_bound(*swap_value);
    r.eof_lower = eof_lower_bound(*swap_value);
    r.tangle_lower = tangle_lower_bound(*swap_value);
  }
  return r;
}

}  // namespace cvent
