#ifndef CIQ_LATTICE_HPP
#define CIQ_LATTICE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "ciq/errors.hpp"

namespace ciq {

// Periodic cubic lattice with an odd number of points per axis.
//
// Sites are indexed x1-fastest: index(x) = x1 + n*(x2 + n*x3).  Fourier
// modes carry integer triples m in [-h, h]^3 with h = (n-1)/2 and are
// stored in the same linearized order after shifting each component by h,
// so mode (m1,m2,m3) lives at (m1+h) + n*((m2+h) + n*(m3+h)).  The
// wavevector of a mode is k(m) = (2*pi/box_length) * m.
//
// The odd point count keeps the mode set closed under negation with k = 0
// as the only self-conjugate mode.
struct LatticeGrid {
  int n_points;
  double spacing;

  LatticeGrid(int n_points, double spacing);

  int half() const { return (n_points - 1) / 2; }
  double box_length() const { return n_points * spacing; }
  std::size_t n_sites() const {
    auto n = static_cast<std::size_t>(n_points);
    return n * n * n;
  }

  std::size_t site_index(int x1, int x2, int x3) const {
    auto n = static_cast<std::size_t>(n_points);
    return static_cast<std::size_t>(x1) +
           n * (static_cast<std::size_t>(x2) + n * static_cast<std::size_t>(x3));
  }
  std::array<int, 3> site_coords(std::size_t index) const {
    int n = n_points;
    int i = static_cast<int>(index);
    return {i % n, (i / n) % n, i / (n * n)};
  }

  // Components of m must lie in [-half, half].
  std::size_t mode_index(int m1, int m2, int m3) const {
    return site_index(m1 + half(), m2 + half(), m3 + half());
  }
  std::array<int, 3> mode_coords(std::size_t index) const {
    auto c = site_coords(index);
    return {c[0] - half(), c[1] - half(), c[2] - half()};
  }
  std::size_t conjugate_mode_index(std::size_t index) const {
    auto m = mode_coords(index);
    return mode_index(-m[0], -m[1], -m[2]);
  }

  double wavenumber(int m) const;
  std::array<double, 3> wavevector(const std::array<int, 3>& m) const {
    return {wavenumber(m[0]), wavenumber(m[1]), wavenumber(m[2])};
  }
  double wavevector_squared(const std::array<int, 3>& m) const {
    auto k = wavevector(m);
    return k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  }

  bool operator==(const LatticeGrid& other) const {
    return n_points == other.n_points && spacing == other.spacing;
  }
};

// Real field sampled on the sites of a grid, x1-fastest.
struct ScalarField {
  LatticeGrid grid;
  std::vector<double> values;

  explicit ScalarField(const LatticeGrid& grid);
  ScalarField(const LatticeGrid& grid, std::vector<double> values);

  double& at(int x1, int x2, int x3) { return values[grid.site_index(x1, x2, x3)]; }
  double at(int x1, int x2, int x3) const { return values[grid.site_index(x1, x2, x3)]; }
};

// Three scalar components on one shared grid.
struct VectorField {
  std::array<ScalarField, 3> components;

  explicit VectorField(const LatticeGrid& grid);
  VectorField(ScalarField c1, ScalarField c2, ScalarField c3);

  const LatticeGrid& grid() const { return components[0].grid; }
  ScalarField& operator[](int i) { return components[i]; }
  const ScalarField& operator[](int i) const { return components[i]; }
};

// Complex Fourier coefficients, one per mode, in the shifted mode order.
// For the spectrum of a real field, coefficients(-m) = conj(coefficients(m)).
struct ComplexSpectrum {
  LatticeGrid grid;
  std::vector<std::complex<double>> coefficients;

  explicit ComplexSpectrum(const LatticeGrid& grid);
  ComplexSpectrum(const LatticeGrid& grid, std::vector<std::complex<double>> coefficients);
};

// Largest |s(-m) - conj(s(m))| over all modes, divided by the largest
// coefficient magnitude (0 if the spectrum is identically zero).
double reality_asymmetry(const ComplexSpectrum& s);

// Analysis: s(m) = n^-3 sum_x f(x) exp(-i k(m).x), so that the synthesis
// f(x) = sum_m s(m) exp(+i k(m).x) carries no prefactor.
ComplexSpectrum dft_forward(const ScalarField& f);

// Synthesis of a real field.  Throws SymmetryViolation if the conjugate
// symmetry of a real field fails beyond 1e-10 relative; the imaginary
// residue is discarded only after that check passes.
ScalarField dft_inverse(const ComplexSpectrum& s);

ScalarField spectral_laplacian(const ScalarField& f);
VectorField spectral_gradient(const ScalarField& f);
ScalarField spectral_divergence(const VectorField& v);
VectorField spectral_curl(const VectorField& v);

}  // namespace ciq

#endif  // CIQ_LATTICE_HPP
