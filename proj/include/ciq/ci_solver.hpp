#ifndef CIQ_CI_SOLVER_HPP
#define CIQ_CI_SOLVER_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ciq/errors.hpp"

namespace ciq {

struct CoordinateLabel {
  std::string field;
  int component = 0;
  std::array<int, 3> site{0, 0, 0};
};

// Numerical thresholds of the bracket identification.  The defaults are
// the documented reference values; every one can be overridden per call.
struct SolverOptions {
  // Singular values of the constraint matrix below rank_cutoff times the
  // largest one are treated as zero when building the null basis, and the
  // same relative threshold decides whether the dynamics is compatible
  // with the degenerate directions of the reduced quadratic form.
  double rank_cutoff = 1e-10;
  // Eigenvalues of the reduced quadratic form smaller in magnitude than
  // max/condition_bound count as degenerate.
  double condition_bound = 1e12;
  // Antisymmetry residual at or above this value means the dynamics is
  // not a Hamiltonian flow of the given form.
  double antisymmetry_error = 1e-6;
  // Constraint-preservation residual, relative to the scale of the
  // dynamics matrix.
  double drift_tolerance = 1e-10;
  // Relative tolerance for the on-surface check of propagated states.
  double surface_tolerance = 1e-8;
};

// A quadratic singular system: energy H = 1/2 x^T M x, linear dynamics
// xdot = A x (the first-order Taylor coefficient at t = 0), and linear
// constraints C x = 0.  C may have zero rows.
struct QuadraticSystem {
  Eigen::MatrixXd hamiltonian_form;  // M, symmetric d x d
  Eigen::MatrixXd dynamics;          // A, d x d
  Eigen::MatrixXd constraints;       // C, c x d
  std::vector<CoordinateLabel> labels;

  Eigen::Index dim() const { return hamiltonian_form.rows(); }

  // Shape and symmetry checks; throws DimensionMismatch or UsageError.
  void validate() const;
};

// Equal-time bracket matrix theta with {x_I, x_J} = theta(I, J), the
// orthonormal constraint-surface basis it was solved on, and the solve
// residuals (antisymmetry and Hamilton residuals are relative Frobenius
// norms, the constraint residual is the largest entry of C * theta).
struct BracketMatrix {
  Eigen::MatrixXd theta;
  Eigen::MatrixXd basis;
  double antisymmetry_residual = 0.0;
  double hamilton_residual = 0.0;
  double constraint_residual = 0.0;
};

// Orthonormal basis of the null space of `constraints` (columns of the
// result).  The column count of `constraints` fixes the ambient
// dimension; zero rows give the identity.  Rank is decided by discarding
// singular values below rank_cutoff times the largest.
Eigen::MatrixXd constraint_null_basis(const Eigen::MatrixXd& constraints,
                                      double rank_cutoff = 1e-10);

// Imposes Hamilton's equations on the first-order expansion at t = 0:
// with B the constraint-surface basis, solves (B^T theta B)(B^T M B) =
// B^T A B for the bracket matrix and expands back, theta = B theta_r B^T.
//
// Degenerate directions of B^T M B (eigenvalues below the condition
// bound) carry no energy; the identification leaves the bracket columns
// along them free and they are completed antisymmetrically from the
// determined rows.  Everything the equations do determine is checked,
// not imposed: an antisymmetry residual at or above
// options.antisymmetry_error throws InconsistentSystem.
//
// Throws DegenerateHamiltonian when the dynamics excites zero-energy
// directions (no bracket matrix can reproduce it), and ConstraintDrift
// when C * A * B is not negligible.
BracketMatrix solve_brackets(const QuadraticSystem& sys,
                             const SolverOptions& options = {});

// state + t * A * state.
Eigen::VectorXd taylor_first_order(const QuadraticSystem& sys,
                                   const Eigen::VectorXd& state, double t);

// exp(A t) * state.  Throws ConstraintViolation if the state is off the
// constraint surface.
Eigen::VectorXd evolve_exact(const QuadraticSystem& sys,
                             const Eigen::VectorXd& state, double t);

// 1/2 state^T M state.
double hamiltonian_value(const QuadraticSystem& sys, const Eigen::VectorXd& state);

// Propagates `trials` random constraint-surface states to every time in
// `times` and returns the largest relative residual of
// A x(t) = theta M x(t): Hamilton's equations hold with the same bracket
// matrix at every later instant.
double verify_time_covariance(const QuadraticSystem& sys, const BracketMatrix& brackets,
                              const std::vector<double>& times, int trials,
                              std::uint64_t seed = 1);

// Covariance scan that also tracks energy conservation along the flow;
// verify_time_covariance returns the first component.
struct CovarianceScan {
  double covariance_residual = 0.0;
  double energy_drift = 0.0;  // relative to the initial energy
};
CovarianceScan covariance_scan(const QuadraticSystem& sys, const BracketMatrix& brackets,
                               const std::vector<double>& times, int trials,
                               std::uint64_t seed = 1);

}  // namespace ciq

#endif  // CIQ_CI_SOLVER_HPP
