#include "ciq/ci_solver.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "ciq/random.hpp"

namespace ciq {

namespace {

double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::MatrixXd surface_basis(const QuadraticSystem& sys, const SolverOptions& options) {
  if (sys.constraints.rows() == 0) {
    return Eigen::MatrixXd::Identity(sys.dim(), sys.dim());
  }
  return constraint_null_basis(sys.constraints, options.rank_cutoff);
}

void check_on_surface(const QuadraticSystem& sys, const Eigen::VectorXd& state,
                      double tolerance) {
  if (sys.constraints.rows() == 0) return;
  const double violation = max_abs(sys.constraints * state);
  const double scale = max_abs(sys.constraints) * max_abs(state);
  if (violation > tolerance * std::max(scale, 1e-300)) {
    throw ConstraintViolation("state is off the constraint surface");
  }
}

}  // namespace

void QuadraticSystem::validate() const {
  const Eigen::Index d = dim();
  if (hamiltonian_form.cols() != d || dynamics.rows() != d || dynamics.cols() != d) {
    throw DimensionMismatch("M and A must be square with matching dimension");
  }
  if (constraints.size() > 0 && constraints.cols() != d) {
    throw DimensionMismatch("constraint rows must have the system dimension");
  }
  if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != d) {
    throw DimensionMismatch("labels must be empty or one per coordinate");
  }
  const double scale = max_abs(hamiltonian_form);
  if (max_abs(hamiltonian_form - hamiltonian_form.transpose()) > 1e-12 * std::max(scale, 1e-300)) {
    throw UsageError("Hamiltonian quadratic form must be symmetric");
  }
}

Eigen::MatrixXd constraint_null_basis(const Eigen::MatrixXd& constraints,
                                      double rank_cutoff) {
  const Eigen::Index d = constraints.cols();
  if (constraints.rows() == 0) return Eigen::MatrixXd::Identity(d, d);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double largest = sigma.size() > 0 ? sigma(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > rank_cutoff * largest) ++rank;
  }
  return svd.matrixV().rightCols(d - rank);
}

BracketMatrix solve_brackets(const QuadraticSystem& sys, const SolverOptions& options) {
  sys.validate();
  const Eigen::MatrixXd basis = surface_basis(sys, options);
  const double dynamics_scale = max_abs(sys.dynamics);

  if (sys.constraints.rows() > 0) {
    const double drift = max_abs(sys.constraints * sys.dynamics * basis);
    if (drift > options.drift_tolerance * std::max(dynamics_scale, 1e-300)) {
      throw ConstraintDrift("dynamics does not preserve the constraint surface");
    }
  }

  const Eigen::MatrixXd reduced_form = basis.transpose() * sys.hamiltonian_form * basis;
  const Eigen::MatrixXd reduced_dynamics = basis.transpose() * sys.dynamics * basis;
  const Eigen::Index r = basis.cols();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(reduced_form);
  if (eig.info() != Eigen::Success) {
    throw DegenerateHamiltonian("eigendecomposition of the reduced form failed");
  }
  const Eigen::VectorXd evals = eig.eigenvalues();
  const Eigen::MatrixXd q = eig.eigenvectors();
  const double top = evals.cwiseAbs().maxCoeff();

  const double reduced_dynamics_scale = max_abs(reduced_dynamics);
  if (top == 0.0 && reduced_dynamics_scale > 0.0) {
    throw DegenerateHamiltonian("quadratic form vanishes but the dynamics does not");
  }

  // Split the spectrum into retained and degenerate (zero-energy) parts.
  Eigen::VectorXd inverse_evals(r);
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (top == 0.0 || std::abs(evals(i)) <= top / options.condition_bound) {
      inverse_evals(i) = 0.0;
      kernel.push_back(i);
    } else {
      inverse_evals(i) = 1.0 / evals(i);
    }
  }

  // In the eigenbasis of the reduced form: theta_r = A_r * pinv(M_r),
  // which is exactly A_r * M_r^-1 when nothing is degenerate.
  const Eigen::MatrixXd dynamics_eig = reduced_dynamics * q;
  Eigen::MatrixXd theta_r = dynamics_eig * inverse_evals.asDiagonal() * q.transpose();

  if (!kernel.empty() && reduced_dynamics_scale > 0.0) {
    Eigen::MatrixXd z(r, static_cast<Eigen::Index>(kernel.size()));
    for (std::size_t i = 0; i < kernel.size(); ++i) z.col(i) = q.col(kernel[i]);

    // Hamilton's equations only determine the bracket columns that meet
    // the range of M_r.  They have no solution at all if zero-energy
    // directions generate motion.
    const double incompatibility = max_abs(reduced_dynamics * z);
    if (incompatibility > options.rank_cutoff * reduced_dynamics_scale) {
      throw DegenerateHamiltonian(
          "dynamics excites zero-energy directions of the quadratic form");
    }
    // The undetermined columns multiply derivatives of H that vanish
    // identically; fill them antisymmetrically from the determined rows.
    theta_r -= theta_r.transpose() * (z * z.transpose());
  }

  BracketMatrix result;
  result.basis = basis;
  result.theta = basis * theta_r * basis.transpose();

  const double theta_scale = result.theta.norm();
  result.antisymmetry_residual =
      theta_scale > 0.0
          ? (result.theta + result.theta.transpose()).norm() / theta_scale
          : 0.0;

  const Eigen::MatrixXd rhs = sys.dynamics * basis;
  const double rhs_scale = rhs.norm();
  result.hamilton_residual =
      rhs_scale > 0.0
          ? (rhs - result.theta * sys.hamiltonian_form * basis).norm() / rhs_scale
          : 0.0;

  result.constraint_residual =
      sys.constraints.rows() > 0 ? max_abs(sys.constraints * result.theta) : 0.0;

  if (result.antisymmetry_residual >= options.antisymmetry_error) {
    throw InconsistentSystem(
        "dynamics is not a Hamiltonian flow of the quadratic form "
        "(antisymmetry residual " +
        std::to_string(result.antisymmetry_residual) + ")");
  }
  return result;
}

Eigen::VectorXd taylor_first_order(const QuadraticSystem& sys,
                                   const Eigen::VectorXd& state, double t) {
  return state + t * (sys.dynamics * state);
}

Eigen::VectorXd evolve_exact(const QuadraticSystem& sys, const Eigen::VectorXd& state,
                             double t) {
  check_on_surface(sys, state, SolverOptions{}.surface_tolerance);
  const Eigen::MatrixXd propagator = (sys.dynamics * t).exp();
  return propagator * state;
}

double hamiltonian_value(const QuadraticSystem& sys, const Eigen::VectorXd& state) {
  return 0.5 * state.dot(sys.hamiltonian_form * state);
}

CovarianceScan covariance_scan(const QuadraticSystem& sys, const BracketMatrix& brackets,
                               const std::vector<double>& times, int trials,
                               std::uint64_t seed) {
  const Eigen::Index r = brackets.basis.cols();
  Rng rng(seed);
  Eigen::MatrixXd states(sys.dim(), trials);
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd coeffs(r);
    for (Eigen::Index i = 0; i < r; ++i) coeffs(i) = rng.symmetric();
    states.col(trial) = brackets.basis * coeffs;
  }

  CovarianceScan scan;
  for (double t : times) {
    const Eigen::MatrixXd propagator = (sys.dynamics * t).exp();
    for (int trial = 0; trial < trials; ++trial) {
      const Eigen::VectorXd evolved = propagator * states.col(trial);
      const Eigen::VectorXd velocity = sys.dynamics * evolved;
      const double denom = std::max(velocity.norm(), 1e-300);
      const double residual =
          (velocity - brackets.theta * (sys.hamiltonian_form * evolved)).norm() / denom;
      scan.covariance_residual = std::max(scan.covariance_residual, residual);

      const double initial = hamiltonian_value(sys, states.col(trial));
      const double drift = std::abs(hamiltonian_value(sys, evolved) - initial) /
                           std::max(std::abs(initial), 1e-300);
      scan.energy_drift = std::max(scan.energy_drift, drift);
    }
  }
  return scan;
}

double verify_time_covariance(const QuadraticSystem& sys, const BracketMatrix& brackets,
                              const std::vector<double>& times, int trials,
                              std::uint64_t seed) {
  return covariance_scan(sys, brackets, times, trials, seed).covariance_residual;
}

}  // namespace ciq
