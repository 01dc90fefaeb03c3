#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ciq/ci_solver.hpp"
#include "ciq/scenarios.hpp"

using namespace ciq;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> sorted_mode_k2(const LatticeGrid& grid) {
  std::vector<double> values;
  values.reserve(grid.n_sites());
  for (std::size_t m = 0; m < grid.n_sites(); ++m) {
    values.push_back(grid.wavevector_squared(grid.mode_coords(m)));
  }
  std::sort(values.begin(), values.end());
  return values;
}

// Real single-mode vector field c * cos(k.x) with component weights c.
Eigen::VectorXd single_mode_vector(const LatticeGrid& grid, const std::array<int, 3>& m,
                                   const std::array<double, 3>& weights) {
  const auto v = static_cast<Eigen::Index>(grid.n_sites());
  Eigen::VectorXd out(3 * v);
  for (Eigen::Index s = 0; s < v; ++s) {
    const auto c = grid.site_coords(static_cast<std::size_t>(s));
    const double phase =
        kTwoPi * (m[0] * c[0] + m[1] * c[1] + m[2] * c[2]) / grid.n_points;
    for (int i = 0; i < 3; ++i) out(i * v + s) = weights[i] * std::cos(phase);
  }
  return out;
}

}  // namespace

TEST_CASE("spectral minus-laplacian matrix has the analytic eigenvalues") {
  const LatticeGrid grid(3, 1.0);
  const Eigen::MatrixXd k = minus_laplacian_matrix(grid);
  CHECK((k - k.transpose()).cwiseAbs().maxCoeff() == 0.0);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(k);
  const auto expected = sorted_mode_k2(grid);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(eig.eigenvalues()(static_cast<Eigen::Index>(i)) ==
          doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("derivative matrix is the spectral derivative") {
  const LatticeGrid grid(5, 0.4);
  const Eigen::MatrixXd d0 = derivative_matrix(grid, 0);
  CHECK((d0 + d0.transpose()).cwiseAbs().maxCoeff() == 0.0);

  // d/dx of cos(k x) = -k sin(k x) on the first axis mode.
  const auto v = static_cast<Eigen::Index>(grid.n_sites());
  Eigen::VectorXd field(v);
  Eigen::VectorXd expected(v);
  const double k = grid.wavenumber(1);
  for (Eigen::Index s = 0; s < v; ++s) {
    const double phase = kTwoPi * grid.site_coords(static_cast<std::size_t>(s))[0] /
                         grid.n_points;
    field(s) = std::cos(phase);
    expected(s) = -k * std::sin(phase);
  }
  CHECK((d0 * field - expected).cwiseAbs().maxCoeff() < 1e-13);

  // Gradient composes to the laplacian.
  Eigen::MatrixXd laplace = Eigen::MatrixXd::Zero(v, v);
  for (int axis = 0; axis < 3; ++axis) {
    const Eigen::MatrixXd d = derivative_matrix(grid, axis);
    laplace -= d * d;  // minus laplacian = -(d/dx)^2 summed
  }
  CHECK((laplace - minus_laplacian_matrix(grid)).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("kg system assembles the wave operator") {
  const LatticeGrid grid(3, 1.0);
  const QuadraticSystem sys = build_kg_system(KGScenario(grid, 1.0));
  const auto v = static_cast<Eigen::Index>(grid.n_sites());
  REQUIRE(sys.dim() == 2 * v);
  CHECK((sys.hamiltonian_form - sys.hamiltonian_form.transpose()).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(sys.constraints.rows() == 0);
  CHECK(sys.labels.size() == static_cast<std::size_t>(2 * v));
  CHECK(sys.labels.front().field == "phi");
  CHECK(sys.labels.back().field == "pi");

  // pidot = -m^2 phi for constant fields: the lower-left block applied to
  // a uniform vector is -m^2 times that vector.
  const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(v, 1.0);
  const Eigen::VectorXd response = sys.dynamics.bottomLeftCorner(v, v) * uniform;
  CHECK((response + 1.0 * uniform).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("kg brackets equal the site delta over the cell volume") {
  for (double spacing : {1.0, 0.5}) {
    for (double mass : {0.5, 1.0, 2.0}) {
      const LatticeGrid grid(3, spacing);
      const QuadraticSystem sys = build_kg_system(KGScenario(grid, mass));
      const BracketMatrix brackets = solve_brackets(sys);
      const double err = compare_brackets(brackets.theta, expected_kg_bracket(grid));
      CHECK(err < 1e-9 / std::pow(spacing, 3));
    }
  }
}

TEST_CASE("kg brackets at n = 5") {
  const LatticeGrid grid(5, 1.0);
  const QuadraticSystem sys = build_kg_system(KGScenario(grid, 1.0));
  const BracketMatrix brackets = solve_brackets(sys);
  CHECK(compare_brackets(brackets.theta, expected_kg_bracket(grid)) < 1e-9);
}

TEST_CASE("maxwell quadratic form acts as |k|^2 on transverse modes only") {
  const LatticeGrid grid(3, 1.0);
  const QuadraticSystem sys = build_maxwell_system(MaxwellScenario(grid));
  const auto v = static_cast<Eigen::Index>(grid.n_sites());
  const double cell = std::pow(grid.spacing, 3);
  const Eigen::MatrixXd m_aa = sys.hamiltonian_form.topLeftCorner(3 * v, 3 * v) / cell;

  const std::array<int, 3> mode{1, 0, 0};
  const double k2 = grid.wavevector_squared(mode);

  // Longitudinal: weights parallel to k.
  const Eigen::VectorXd longitudinal = single_mode_vector(grid, mode, {1.0, 0.0, 0.0});
  CHECK((m_aa * longitudinal).cwiseAbs().maxCoeff() < 1e-12);

  // Transverse: weights perpendicular to k pick up |k|^2.
  const Eigen::VectorXd transverse = single_mode_vector(grid, mode, {0.0, 1.0, 0.5});
  CHECK((m_aa * transverse - k2 * transverse).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("maxwell constraint surface has dimension 4 n^3 + 2") {
  const LatticeGrid grid(3, 1.0);
  const QuadraticSystem sys = build_maxwell_system(MaxwellScenario(grid));
  const Eigen::MatrixXd basis = constraint_null_basis(sys.constraints);
  const auto v = static_cast<Eigen::Index>(grid.n_sites());
  CHECK(basis.cols() == 6 * v - 2 * (v - 1));

  // The dynamics maps the surface into itself.
  const double scale = sys.dynamics.cwiseAbs().maxCoeff();
  CHECK((sys.constraints * sys.dynamics * basis).cwiseAbs().maxCoeff() < 1e-10 * scale);
}

TEST_CASE("expected maxwell bracket is block-antisymmetric and transverse") {
  const LatticeGrid grid(3, 1.0);
  const Eigen::MatrixXd expected = expected_maxwell_bracket(grid);
  CHECK((expected + expected.transpose()).cwiseAbs().maxCoeff() < 1e-14);

  const QuadraticSystem sys = build_maxwell_system(MaxwellScenario(grid));
  CHECK((sys.constraints * expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("maxwell brackets equal minus the transverse delta") {
  for (double spacing : {1.0, 0.5}) {
    const LatticeGrid grid(3, spacing);
    const QuadraticSystem sys = build_maxwell_system(MaxwellScenario(grid));
    const BracketMatrix brackets = solve_brackets(sys);
    const double cell = std::pow(spacing, 3);
    const auto v = static_cast<Eigen::Index>(grid.n_sites());

    const Eigen::MatrixXd expected = expected_maxwell_bracket(grid);
    CHECK(compare_brackets(brackets.theta, expected) < 1e-8 / cell);

    // The {A, pi} block against the kernel, and the diagonal blocks
    // against zero, at the tighter tolerance.
    const Eigen::MatrixXd a_pi_err =
        brackets.theta.topRightCorner(3 * v, 3 * v) -
        expected.topRightCorner(3 * v, 3 * v);
    CHECK(a_pi_err.cwiseAbs().maxCoeff() < 1e-9 / cell);
    CHECK(brackets.theta.topLeftCorner(3 * v, 3 * v).cwiseAbs().maxCoeff() <
          1e-9 / cell);
    CHECK(brackets.theta.bottomRightCorner(3 * v, 3 * v).cwiseAbs().maxCoeff() <
          1e-9 / cell);

    // Constraints commute with everything.
    CHECK(brackets.constraint_residual < 1e-10);
  }
}

TEST_CASE("time covariance holds for both scenarios") {
  const LatticeGrid grid(3, 1.0);
  const std::vector<double> times{0.1, 1.0};

  const QuadraticSystem kg = build_kg_system(KGScenario(grid, 1.0));
  const BracketMatrix kg_brackets = solve_brackets(kg);
  CHECK(verify_time_covariance(kg, kg_brackets, times, 8, 5) < 1e-9);

  const QuadraticSystem maxwell = build_maxwell_system(MaxwellScenario(grid));
  const BracketMatrix maxwell_brackets = solve_brackets(maxwell);
  CHECK(verify_time_covariance(maxwell, maxwell_brackets, times, 8, 5) < 1e-9);
}

TEST_CASE("compare_brackets") {
  const LatticeGrid grid(3, 1.0);
  const Eigen::MatrixXd expected = expected_kg_bracket(grid);
  CHECK(compare_brackets(expected, expected) == 0.0);

  Eigen::MatrixXd perturbed = expected;
  perturbed(0, 1) += 1e-7;
  CHECK(compare_brackets(perturbed, expected) == doctest::Approx(1e-7));

  CHECK_THROWS_AS(compare_brackets(expected, Eigen::MatrixXd::Zero(2, 2)),
                  DimensionMismatch);
}

TEST_CASE("kg scenario validation") {
  const LatticeGrid grid(3, 1.0);
  CHECK_THROWS_AS(KGScenario(grid, 0.0), UsageError);
  CHECK_THROWS_AS(KGScenario(grid, -1.0), UsageError);
}
