#ifndef CIQ_REPORT_HPP
#define CIQ_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace ciq {

struct RunConfig {
  enum class Scenario { kg, maxwell };

  Scenario scenario = Scenario::kg;
  int n_points = 5;
  double spacing = 1.0;
  double mass = 1.0;  // ignored (with a warning at the CLI) for maxwell
  double tolerance = 1e-9;
  std::vector<double> covariance_times{0.1, 1.0};
  int trials = 8;
  std::uint64_t seed = 42;
  std::string output_path;  // empty: do not write a file

  void validate() const;  // throws UsageError
};

// Flat numeric metrics next to the tolerance each one was gated on;
// pass is true iff every metric is within its tolerance.
struct VerificationReport {
  nlohmann::json config;
  std::map<std::string, double> metrics;
  std::map<std::string, double> tolerances;
  bool pass = false;
  std::string error;  // nonempty if the run aborted
  std::int64_t runtime_ms = 0;

  nlohmann::json to_json() const;
};

// Builds the scenario, solves the brackets, compares them to the
// analytic kernel, and runs the covariance, energy, closure, mode-space
// and cross-representation checks.  Solver failures land in the report's
// error field instead of propagating.
VerificationReport run_verify(const RunConfig& config);

// Closure and parity metrics of the polarization basis only.
VerificationReport run_basis_check(int n_points, const std::string& output_path);

// Splits a 3-component CIQF file into its transverse and longitudinal
// parts, written to the two output paths.
void run_decompose(const std::string& input_path, const std::string& transverse_path,
                   const std::string& longitudinal_path);

}  // namespace ciq

#endif  // CIQ_REPORT_HPP
