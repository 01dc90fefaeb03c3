#ifndef CIQ_SCENARIOS_HPP
#define CIQ_SCENARIOS_HPP

#include <Eigen/Dense>

#include "ciq/ci_solver.hpp"
#include "ciq/helmholtz.hpp"
#include "ciq/lattice.hpp"

namespace ciq {

struct KGScenario {
  LatticeGrid grid;
  double mass;

  KGScenario(const LatticeGrid& grid, double mass);
};

struct MaxwellScenario {
  LatticeGrid grid;

  explicit MaxwellScenario(const LatticeGrid& grid) : grid(grid) {}
};

// Dense position-space matrices of the spectral operators, built from
// displacement kernels so they are exactly symmetric (respectively
// antisymmetric) in floating point.

// K = -Laplacian; eigenvalues are |k(m)|^2.
Eigen::MatrixXd minus_laplacian_matrix(const LatticeGrid& grid);
// Spectral d/dx_axis.
Eigen::MatrixXd derivative_matrix(const LatticeGrid& grid, int axis);
// Position-space matrix of the symbol k_i k_j.
Eigen::MatrixXd momentum_pair_matrix(const LatticeGrid& grid, int i, int j);

// Coordinates x = (phi at every site, then pi at every site), d = 2 n^3.
// M = spacing^3 diag(m^2 I + K, I); phidot = pi, pidot = -(m^2 + K) phi;
// no constraints.
QuadraticSystem build_kg_system(const KGScenario& scenario);

// Coordinates x = (A_i at every site, component-major, then pi_i),
// d = 6 n^3.  M = spacing^3 diag(M_AA, I) with M_AA the quadratic form
// |k|^2 delta_ij - k_i k_j per mode; Adot = -pi, pidot = K A; constraint
// rows are the site-wise divergences of both blocks.
QuadraticSystem build_maxwell_system(const MaxwellScenario& scenario);

// Analytic targets: {phi(x), pi(y)} = delta_xy / spacing^3 and
// {A_i(x), pi_j(y)} = -transverse_delta_kernel_ij(x - y), diagonal
// blocks zero.
Eigen::MatrixXd expected_kg_bracket(const LatticeGrid& grid);
Eigen::MatrixXd expected_maxwell_bracket(const LatticeGrid& grid);

// Largest elementwise deviation.
double compare_brackets(const Eigen::MatrixXd& actual, const Eigen::MatrixXd& expected);

}  // namespace ciq

#endif  // CIQ_SCENARIOS_HPP
