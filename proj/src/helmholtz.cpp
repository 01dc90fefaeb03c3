#include "ciq/helmholtz.hpp"

#include <complex>

namespace ciq {

namespace {

enum class Part { transverse, longitudinal };

VectorField project(const VectorField& v, Part part) {
  const LatticeGrid& grid = v.grid();
  const std::array<ComplexSpectrum, 3> s{dft_forward(v[0]), dft_forward(v[1]),
                                         dft_forward(v[2])};
  std::array<ComplexSpectrum, 3> out{ComplexSpectrum(grid), ComplexSpectrum(grid),
                                     ComplexSpectrum(grid)};
  for (std::size_t m = 0; m < grid.n_sites(); ++m) {
    const auto k = grid.wavevector(grid.mode_coords(m));
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    if (k2 == 0.0) {
      // Constant mode: all of it is assigned to the transverse part.
      for (int i = 0; i < 3; ++i) {
        out[i].coefficients[m] =
            (part == Part::transverse) ? s[i].coefficients[m] : 0.0;
      }
      continue;
    }
    std::complex<double> k_dot{0.0, 0.0};
    for (int i = 0; i < 3; ++i) k_dot += k[i] * s[i].coefficients[m];
    for (int i = 0; i < 3; ++i) {
      const std::complex<double> longitudinal = k[i] * k_dot / k2;
      out[i].coefficients[m] = (part == Part::longitudinal)
                                   ? longitudinal
                                   : s[i].coefficients[m] - longitudinal;
    }
  }
  return {dft_inverse(out[0]), dft_inverse(out[1]), dft_inverse(out[2])};
}

}  // namespace

VectorField transverse_project(const VectorField& v) {
  return project(v, Part::transverse);
}

VectorField longitudinal_project(const VectorField& v) {
  return project(v, Part::longitudinal);
}

TransverseKernel transverse_delta_kernel(const LatticeGrid& grid) {
  const double norm = 1.0 / (static_cast<double>(grid.n_sites()) * grid.spacing *
                             grid.spacing * grid.spacing);
  TransverseKernel kernel{grid, std::vector<std::array<double, 9>>(grid.n_sites())};
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      ComplexSpectrum s(grid);
      for (std::size_t m = 0; m < grid.n_sites(); ++m) {
        const auto k = grid.wavevector(grid.mode_coords(m));
        const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        double t;
        if (k2 == 0.0) {
          t = (i == j) ? 1.0 : 0.0;
        } else {
          t = ((i == j) ? 1.0 : 0.0) - k[i] * k[j] / k2;
        }
        s.coefficients[m] = t * norm;
      }
      // T is even and real in k, so this synthesis is a real field.
      const ScalarField entry = dft_inverse(s);
      for (std::size_t d = 0; d < grid.n_sites(); ++d) {
        kernel.entries[d][static_cast<std::size_t>(3 * i + j)] = entry.values[d];
        kernel.entries[d][static_cast<std::size_t>(3 * j + i)] = entry.values[d];
      }
    }
  }
  return kernel;
}

}  // namespace ciq
