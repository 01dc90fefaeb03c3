#include "ciq/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include "ciq/ci_solver.hpp"
#include "ciq/field_io.hpp"
#include "ciq/helmholtz.hpp"
#include "ciq/momentum_rep.hpp"
#include "ciq/random.hpp"
#include "ciq/scenarios.hpp"

namespace ciq {

namespace {

nlohmann::json config_json(const RunConfig& config) {
  return {
      {"scenario", config.scenario == RunConfig::Scenario::kg ? "kg" : "maxwell"},
      {"n_points", config.n_points},
      {"spacing", config.spacing},
      {"mass", config.mass},
      {"tolerance", config.tolerance},
      {"covariance_times", config.covariance_times},
      {"trials", config.trials},
      {"seed", config.seed},
      {"output_path", config.output_path},
  };
}

void write_report_file(const VerificationReport& report, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << report.to_json().dump(2) << "\n";
  if (!out) throw IoError("write to '" + path + "' failed");
}

void finish(VerificationReport& report,
            std::chrono::steady_clock::time_point start) {
  report.pass = report.error.empty();
  for (const auto& [name, value] : report.metrics) {
    const auto it = report.tolerances.find(name);
    if (it != report.tolerances.end() && !(value <= it->second)) report.pass = false;
  }
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
}

ScalarField random_field(const LatticeGrid& grid, Rng& rng) {
  ScalarField f(grid);
  for (double& v : f.values) v = rng.symmetric();
  return f;
}

Eigen::VectorXd stack_fields(const std::vector<const std::vector<double>*>& parts) {
  Eigen::Index total = 0;
  for (const auto* p : parts) total += static_cast<Eigen::Index>(p->size());
  Eigen::VectorXd out(total);
  Eigen::Index at = 0;
  for (const auto* p : parts) {
    for (double v : *p) out(at++) = v;
  }
  return out;
}

double table_deviation(const ModeBracketTable& table, double diagonal) {
  const Eigen::MatrixXd target =
      diagonal * Eigen::MatrixXd::Identity(table.alpha_beta.rows(), table.alpha_beta.cols());
  double worst = (table.alpha_beta - target).cwiseAbs().maxCoeff();
  worst = std::max(worst, table.alpha_alpha.cwiseAbs().maxCoeff());
  worst = std::max(worst, table.beta_beta.cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

void RunConfig::validate() const {
  if (n_points < 3 || n_points % 2 == 0) throw UsageError("n_points must be odd and >= 3");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) throw UsageError("spacing must be positive");
  if (scenario == Scenario::kg && (!(mass > 0.0) || !std::isfinite(mass))) {
    throw UsageError("mass must be positive");
  }
  if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
  if (trials < 1) throw UsageError("trials must be >= 1");
  if (covariance_times.empty()) throw UsageError("covariance_times must not be empty");
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["config"] = config;
  j["metrics"] = metrics;
  j["tolerances"] = tolerances;
  j["pass"] = pass;
  j["error"] = error.empty() ? nlohmann::json() : nlohmann::json(error);
  j["runtime_ms"] = runtime_ms;
  return j;
}

VerificationReport run_verify(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const bool maxwell = config.scenario == RunConfig::Scenario::maxwell;
  const double cell = std::pow(config.spacing, 3);
  const double tol = config.tolerance;

  VerificationReport report;
  report.config = config_json(config);
  report.tolerances = {
      {"bracket_max_err", (maxwell ? 10.0 : 1.0) * tol / cell},
      {"antisymmetry_residual", tol},
      {"hamilton_residual", tol},
      {"constraint_residual", tol / 10.0},
      {"covariance_residual", tol},
      {"mode_bracket_max_err", tol},
      {"hamiltonian_rel_err", tol / 10.0},
      {"energy_drift", tol / 10.0},
  };
  if (maxwell) report.tolerances["closure_max_err"] = 1e-12;

  try {
    const LatticeGrid grid(config.n_points, config.spacing);
    const QuadraticSystem sys = maxwell
                                    ? build_maxwell_system(MaxwellScenario(grid))
                                    : build_kg_system(KGScenario(grid, config.mass));
    const BracketMatrix brackets = solve_brackets(sys);
    report.metrics["antisymmetry_residual"] = brackets.antisymmetry_residual;
    report.metrics["hamilton_residual"] = brackets.hamilton_residual;
    report.metrics["constraint_residual"] = brackets.constraint_residual;

    const Eigen::MatrixXd expected =
        maxwell ? expected_maxwell_bracket(grid) : expected_kg_bracket(grid);
    report.metrics["bracket_max_err"] = compare_brackets(brackets.theta, expected);

    const CovarianceScan scan =
        covariance_scan(sys, brackets, config.covariance_times, config.trials, config.seed);
    report.metrics["covariance_residual"] = scan.covariance_residual;
    report.metrics["energy_drift"] = scan.energy_drift;

    const double volume = std::pow(grid.box_length(), 3);
    Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    if (!maxwell) {
      const ModeBracketTable table =
          bracket_in_modes(brackets.theta, kg_mode_maps(grid));
      report.metrics["mode_bracket_max_err"] = table_deviation(table, 1.0 / volume);

      const ScalarField phi = random_field(grid, rng);
      const ScalarField pi = random_field(grid, rng);
      const Eigen::VectorXd state = stack_fields({&phi.values, &pi.values});
      const double position = hamiltonian_value(sys, state);
      const double momentum = momentum_hamiltonian_kg(scalar_to_alpha(phi),
                                                      scalar_to_alpha(pi), config.mass);
      report.metrics["hamiltonian_rel_err"] =
          std::abs(position - momentum) / std::max(std::abs(position), 1e-300);
    } else {
      const PolarizationBasis basis = build_polarization_basis(grid);
      report.metrics["closure_max_err"] = check_closure(basis);

      const ModeBracketTable table =
          bracket_in_modes(brackets.theta, maxwell_mode_maps(grid, basis));
      report.metrics["mode_bracket_max_err"] = table_deviation(table, -1.0 / volume);

      const std::size_t zero = grid.mode_index(0, 0, 0);
      auto random_coefficients = [&] {
        TransverseModeCoefficients c{grid,
                                     {std::vector<double>(grid.n_sites(), 0.0),
                                      std::vector<double>(grid.n_sites(), 0.0)},
                                     {0.0, 0.0, 0.0}};
        for (std::size_t m = 0; m < grid.n_sites(); ++m) {
          if (m == zero) continue;
          c.lambda_values[0][m] = rng.symmetric();
          c.lambda_values[1][m] = rng.symmetric();
        }
        for (double& v : c.zero_mode) v = rng.symmetric();
        return c;
      };
      const TransverseModeCoefficients alpha = random_coefficients();
      const TransverseModeCoefficients beta = random_coefficients();
      const VectorField a = alphabeta_to_vector(alpha, basis);
      const VectorField p = alphabeta_to_vector(beta, basis);
      const Eigen::VectorXd state =
          stack_fields({&a[0].values, &a[1].values, &a[2].values, &p[0].values,
                        &p[1].values, &p[2].values});
      const double position = hamiltonian_value(sys, state);
      const double momentum = momentum_hamiltonian_maxwell(alpha, beta);
      report.metrics["hamiltonian_rel_err"] =
          std::abs(position - momentum) / std::max(std::abs(position), 1e-300);
    }
  } catch (const Error& e) {
    report.error = e.what();
  }

  finish(report, start);
  write_report_file(report, config.output_path);
  return report;
}

VerificationReport run_basis_check(int n_points, const std::string& output_path) {
  const auto start = std::chrono::steady_clock::now();
  const LatticeGrid grid(n_points, 1.0);  // the basis depends only on directions

  VerificationReport report;
  report.config = {{"scenario", "basis"}, {"n_points", n_points}, {"output_path", output_path}};
  report.tolerances = {
      {"closure_max_err", 1e-12},
      {"parity_max_err", 0.0},
      {"orthonormality_max_err", 1e-12},
      {"handedness_max_err", 1e-12},
  };

  const PolarizationBasis basis = build_polarization_basis(grid);
  double parity = 0.0;
  double orthonormality = 0.0;
  double handedness = 0.0;
  for (std::size_t mode = 0; mode < grid.n_sites(); ++mode) {
    const auto m = grid.mode_coords(mode);
    if (m[0] == 0 && m[1] == 0 && m[2] == 0) continue;
    const std::size_t conj = grid.conjugate_mode_index(mode);
    const auto& e1 = basis.eps1[mode];
    const auto& e2 = basis.eps2[mode];
    for (int i = 0; i < 3; ++i) {
      parity = std::max(parity, std::abs(basis.eps1[conj][i] - e1[i]));
      parity = std::max(parity, std::abs(basis.eps2[conj][i] + e2[i]));
    }
    const double n11 = e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2];
    const double n22 = e2[0] * e2[0] + e2[1] * e2[1] + e2[2] * e2[2];
    const double n12 = e1[0] * e2[0] + e1[1] * e2[1] + e1[2] * e2[2];
    orthonormality = std::max({orthonormality, std::abs(n11 - 1.0), std::abs(n22 - 1.0),
                               std::abs(n12)});
    const auto k = grid.wavevector(m);
    const double norm = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    const std::array<double, 3> crossed{e1[1] * e2[2] - e1[2] * e2[1],
                                        e1[2] * e2[0] - e1[0] * e2[2],
                                        e1[0] * e2[1] - e1[1] * e2[0]};
    for (int i = 0; i < 3; ++i) {
      handedness = std::max(handedness, std::abs(crossed[i] - k[i] / norm));
    }
  }
  report.metrics["closure_max_err"] = check_closure(basis);
  report.metrics["parity_max_err"] = parity;
  report.metrics["orthonormality_max_err"] = orthonormality;
  report.metrics["handedness_max_err"] = handedness;

  finish(report, start);
  write_report_file(report, output_path);
  return report;
}

void run_decompose(const std::string& input_path, const std::string& transverse_path,
                   const std::string& longitudinal_path) {
  FieldVariant field = read_field_file(input_path);
  const VectorField* vector = std::get_if<VectorField>(&field);
  if (vector == nullptr) {
    throw FormatError("decompose expects a 3-component field", 20);
  }
  write_field_file(transverse_path, transverse_project(*vector));
  write_field_file(longitudinal_path, longitudinal_project(*vector));
}

}  // namespace ciq
