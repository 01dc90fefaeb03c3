#ifndef CIQ_HELMHOLTZ_HPP
#define CIQ_HELMHOLTZ_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "ciq/lattice.hpp"

namespace ciq {

// Discrete transverse delta: for every lattice displacement d a real
// symmetric 3x3 matrix
//
//   kernel(d)_ij = (n^3 a^3)^-1 sum_m T_ij(k(m)) exp(i k(m).d),
//
// with T(k) = I - khat khat^T for k != 0 and T(0) = I.  Displacements are
// indexed like sites.  Convolving a vector field with spacing^3 * kernel
// applies the transverse projector.
struct TransverseKernel {
  LatticeGrid grid;
  std::vector<std::array<double, 9>> entries;

  double at(std::size_t displacement, int i, int j) const {
    return entries[displacement][static_cast<std::size_t>(3 * i + j)];
  }
};

// Per-mode application of T(k); the zero mode is kept (T(0) = I), so the
// constant part of a field counts as transverse and the two projectors
// sum to the identity.
VectorField transverse_project(const VectorField& v);

// Per-mode application of khat khat^T, zero at k = 0.
VectorField longitudinal_project(const VectorField& v);

TransverseKernel transverse_delta_kernel(const LatticeGrid& grid);

}  // namespace ciq

#endif  // CIQ_HELMHOLTZ_HPP
