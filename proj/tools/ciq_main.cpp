// ciq: build a lattice field scenario, solve its equal-time brackets and
// verify them against the analytic kernels.
//
// Exit codes: 0 verification passed, 1 verification failed, 2 usage or
// input error.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ciq/errors.hpp"
#include "ciq/report.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"equal-time bracket verification on periodic lattices"};
  app.require_subcommand(1);

  ciq::RunConfig config;
  std::string scenario;
  std::string out_path = "report.json";

  auto* verify = app.add_subcommand("verify", "solve a scenario and verify its brackets");
  verify->add_option("scenario", scenario, "kg or maxwell")
      ->required()
      ->check(CLI::IsMember({"kg", "maxwell"}));
  verify->add_option("--n", config.n_points, "points per axis (odd, >= 3)");
  verify->add_option("--spacing", config.spacing, "lattice spacing");
  auto* mass_opt = verify->add_option("--mass", config.mass, "field mass (kg only)");
  verify->add_option("--tol", config.tolerance, "base tolerance");
  verify->add_option("--times", config.covariance_times, "covariance check times");
  verify->add_option("--trials", config.trials, "random trial states");
  verify->add_option("--seed", config.seed, "random seed");
  verify->add_option("--out", out_path, "report path");

  std::string in_path;
  std::string transverse_path;
  std::string longitudinal_path;
  auto* decompose = app.add_subcommand("decompose", "split a field file into its "
                                                    "transverse and longitudinal parts");
  decompose->add_option("--in", in_path, "input CIQF file")->required();
  decompose->add_option("--out-transverse", transverse_path, "transverse output")->required();
  decompose->add_option("--out-longitudinal", longitudinal_path, "longitudinal output")
      ->required();

  int basis_n = 9;
  std::string basis_out = "report.json";
  auto* basis = app.add_subcommand("basis", "check the polarization basis conditions");
  basis->add_option("--n", basis_n, "points per axis (odd, >= 3)");
  basis->add_option("--out", basis_out, "report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      config.scenario = scenario == "kg" ? ciq::RunConfig::Scenario::kg
                                         : ciq::RunConfig::Scenario::maxwell;
      config.output_path = out_path;
      if (config.scenario == ciq::RunConfig::Scenario::maxwell && mass_opt->count() > 0) {
        std::fprintf(stderr, "warning: --mass is ignored for the maxwell scenario\n");
      }
      const ciq::VerificationReport report = ciq::run_verify(config);
      if (!report.error.empty()) {
        std::fprintf(stderr, "error: %s\n", report.error.c_str());
      }
      std::printf("%s (report: %s)\n", report.pass ? "PASS" : "FAIL", out_path.c_str());
      return report.pass ? 0 : 1;
    }
    if (decompose->parsed()) {
      ciq::run_decompose(in_path, transverse_path, longitudinal_path);
      return 0;
    }
    const ciq::VerificationReport report = ciq::run_basis_check(basis_n, basis_out);
    std::printf("%s (report: %s)\n", report.pass ? "PASS" : "FAIL", basis_out.c_str());
    return report.pass ? 0 : 1;
  } catch (const ciq::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const ciq::FormatError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const ciq::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
