#ifndef CIQ_MOMENTUM_REP_HPP
#define CIQ_MOMENTUM_REP_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "ciq/lattice.hpp"

namespace ciq {

// Real orthonormal pair (eps1, eps2) spanning the plane perpendicular to
// k(m) for every nonzero mode, with eps1 x eps2 = khat, eps1 even and
// eps2 odd under m -> -m.  Zero-mode entries are unused.
//
// The construction is deterministic: on the canonical half of the mode
// set (m1 > 0, or m1 = 0 and m2 > 0, or m1 = m2 = 0 and m3 > 0), eps1 is
// the normalized rejection of the coordinate axis with the smallest
// |khat| component (ties to the smallest axis index), eps2 = khat x eps1;
// the other half is filled by parity.
struct PolarizationBasis {
  LatticeGrid grid;
  std::vector<std::array<double, 3>> eps1;
  std::vector<std::array<double, 3>> eps2;

  const std::array<double, 3>& eps(int lambda, std::size_t mode) const {
    return lambda == 1 ? eps1[mode] : eps2[mode];
  }
};

PolarizationBasis build_polarization_basis(const LatticeGrid& grid);

// Largest elementwise deviation of eps1 eps1^T + eps2 eps2^T from
// I - khat khat^T over all nonzero modes.
double check_closure(const PolarizationBasis& basis);

// Real coefficients alpha(m) of a real scalar field, one per mode:
// fhat(m) = (1+i)/2 alpha(m) + (1-i)/2 alpha(-m).
struct ScalarModeCoefficients {
  LatticeGrid grid;
  std::vector<double> values;
};

// Real transverse coefficients alpha_lambda(m) for every nonzero mode
// plus the three constant-field components, which the polarization
// expansion cannot carry (khat is undefined at k = 0).
struct TransverseModeCoefficients {
  LatticeGrid grid;
  std::array<std::vector<double>, 2> lambda_values;  // zero-mode slots stay 0
  std::array<double, 3> zero_mode{0.0, 0.0, 0.0};
};

ScalarModeCoefficients scalar_to_alpha(const ScalarField& f);
ScalarField alpha_to_scalar(const ScalarModeCoefficients& alpha);

// Throws NotTransverse if the longitudinal part of v exceeds 1e-10
// relative to the field scale.
TransverseModeCoefficients vector_to_alphabeta(const VectorField& v,
                                               const PolarizationBasis& basis);
VectorField alphabeta_to_vector(const TransverseModeCoefficients& coeffs,
                                const PolarizationBasis& basis);

// H = (L^3/2) sum_m [beta(m)^2 + (m^2 + |k|^2) alpha(m)^2].  With this
// library's transform normalization the continuum (2 pi)^3 prefactor and
// the dk^3 measure combine to box_length^3.
double momentum_hamiltonian_kg(const ScalarModeCoefficients& alpha,
                               const ScalarModeCoefficients& beta, double mass);

// H = (L^3/2) [sum_{m != 0, lambda} (beta_l^2 + |k|^2 alpha_l^2) +
// |beta_0|^2]; the constant mode is purely kinetic.
double momentum_hamiltonian_maxwell(const TransverseModeCoefficients& alpha,
                                    const TransverseModeCoefficients& beta);

// Linear extraction maps from scenario coordinates to mode coefficients,
// matched to the coordinate ordering of the scenario builders.
struct ExtractionMaps {
  Eigen::MatrixXd alpha;
  Eigen::MatrixXd beta;
};

// Rows: one per mode (n^3); columns: (phi sites, pi sites).
ExtractionMaps kg_mode_maps(const LatticeGrid& grid);

// Rows: lambda = 1 over nonzero modes, lambda = 2 over nonzero modes,
// then the three zero-mode components; columns: (A sites component-major,
// pi sites).
ExtractionMaps maxwell_mode_maps(const LatticeGrid& grid, const PolarizationBasis& basis);

// Mode-space bracket tables S_a theta S_b^T and the two diagonal-block
// tables; theta must act on the same coordinates as the maps.
struct ModeBracketTable {
  Eigen::MatrixXd alpha_beta;
  Eigen::MatrixXd alpha_alpha;
  Eigen::MatrixXd beta_beta;
};

ModeBracketTable bracket_in_modes(const Eigen::MatrixXd& theta,
                                  const ExtractionMaps& maps);

}  // namespace ciq

#endif  // CIQ_MOMENTUM_REP_HPP
