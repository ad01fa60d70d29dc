#pragma once

#include "cvent/json_io.hpp"
#include "cvent/quadrature.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvent::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNumeric = 3,
  kExitIo = 4,
  kExitVerifyBreach = 5,
  kExitInternal = 70,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Quantity { OptimalWitness, Witness01, Witness, RealignmentNorm, Classify, Bounds, Swap };

[[nodiscard]] Quantity parse_quantity(std::string_view name);
[[nodiscard]] std::string_view to_string(Quantity q);

enum class IntegrationRoute { Quadrature, Exact };

struct EvalOptions {
  std::optional<double> mu1;
  std::optional<double> mu2;
  IntegrationRoute route = IntegrationRoute::Quadrature;
  QuadratureConfig quadrature;
};

struct Evaluation {
  nlohmann::json record;
  double value = 0.0;
  std::string verdict;
};

[[nodiscard]] Evaluation evaluate(const StateDescriptor& state, Quantity quantity, const EvalOptions& options);

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 2;

  /// Endpoints are hit exactly.
  [[nodiscard]] double value(int k) const;
};

/// "name:min:max:steps"
[[nodiscard]] Axis parse_axis(std::string_view text);

struct ScanSpec {
  StateDescriptor base;
  std::array<Axis, 2> axes;
  Quantity quantity = Quantity::Witness01;
  EvalOptions options;
  int workers = 1;
};

/// Complete CSV text, rows ordered with the first axis outermost. Cells that raise
/// report value nan and verdict "unphysical" (invalid state), "singular" (numeric
/// domain) or "error" (convergence).
[[nodiscard]] std::string scan_csv(const ScanSpec& spec);

/// Shortest decimal string that round-trips to the same binary64.
[[nodiscard]] std::string format_double(double x);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

struct VerifyCase {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string failure;

  [[nodiscard]] bool ok() const { return failure.empty() && max_deviation <= tolerance; }
};

struct VerifyReport {
  int cutoff = 0;
  double r_max = 0.0;
  std::vector<VerifyCase> cases;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

[[nodiscard]] VerifyReport run_verify(int cutoff, double r_max,
                                      const std::optional<std::filesystem::path>& dump_dir = std::nullopt);

/// Reads --state: inline JSON when the text starts with '{', otherwise a file path.
[[nodiscard]] nlohmann::json load_state_json(const std::string& text);

[[nodiscard]] int default_workers();

/// Maps engine exceptions to the documented exit codes.
[[nodiscard]] int exit_code_for(const std::exception& e);

int run(int argc, char** argv);

}  // namespace cvent::cli
