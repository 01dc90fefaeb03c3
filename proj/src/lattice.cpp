#include "ciq/lattice.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace ciq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_finite(const std::vector<double>& values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw UsageError("field values must be finite");
  }
}

// N x N complex matrix applied along one axis of an N^3 array.
// Row-major: out[r] = sum_c mat[r*N + c] * in[c] on every lattice line.
void apply_along_axis(std::vector<std::complex<double>>& data, int n, int axis,
                      const std::vector<std::complex<double>>& mat) {
  const std::size_t stride = (axis == 0) ? 1 : (axis == 1) ? static_cast<std::size_t>(n)
                                                           : static_cast<std::size_t>(n) * n;
  std::vector<std::complex<double>> line(n);
  const std::size_t total = data.size();
  for (std::size_t base = 0; base < total; ++base) {
    const int coord = (axis == 0) ? static_cast<int>(base % n)
                    : (axis == 1) ? static_cast<int>((base / n) % n)
                                  : static_cast<int>(base / (static_cast<std::size_t>(n) * n));
    if (coord != 0) continue;
    for (int i = 0; i < n; ++i) line[i] = data[base + stride * i];
    for (int r = 0; r < n; ++r) {
      std::complex<double> acc{0.0, 0.0};
      const std::complex<double>* row = mat.data() + static_cast<std::size_t>(r) * n;
      for (int c = 0; c < n; ++c) acc += row[c] * line[c];
      data[base + stride * r] = acc;
    }
  }
}

// Analysis matrix F[m][x] = exp(-2*pi*i*(m-h)*x/n)/n.  Rows for -m are the
// exact conjugates of rows for +m so that real input keeps bit-exact
// conjugate symmetry.
std::vector<std::complex<double>> analysis_matrix(int n) {
  const int h = (n - 1) / 2;
  std::vector<std::complex<double>> mat(static_cast<std::size_t>(n) * n);
  for (int freq = 0; freq <= h; ++freq) {
    for (int x = 0; x < n; ++x) {
      const int r = (freq * x) % n;
      const double angle = kTwoPi * r / n;
      const std::complex<double> w{std::cos(angle) / n, -std::sin(angle) / n};
      mat[static_cast<std::size_t>(h + freq) * n + x] = w;
      mat[static_cast<std::size_t>(h - freq) * n + x] = std::conj(w);
    }
  }
  return mat;
}

// Synthesis matrix G[x][m] = exp(+2*pi*i*(m-h)*x/n).
std::vector<std::complex<double>> synthesis_matrix(int n) {
  const int h = (n - 1) / 2;
  std::vector<std::complex<double>> mat(static_cast<std::size_t>(n) * n);
  for (int freq = 0; freq <= h; ++freq) {
    for (int x = 0; x < n; ++x) {
      const int r = (freq * x) % n;
      const double angle = kTwoPi * r / n;
      const std::complex<double> w{std::cos(angle), std::sin(angle)};
      mat[static_cast<std::size_t>(x) * n + (h + freq)] = w;
      mat[static_cast<std::size_t>(x) * n + (h - freq)] = std::conj(w);
    }
  }
  return mat;
}

std::vector<std::complex<double>> synthesize(const ComplexSpectrum& s) {
  std::vector<std::complex<double>> data = s.coefficients;
  const auto mat = synthesis_matrix(s.grid.n_points);
  for (int axis = 0; axis < 3; ++axis) apply_along_axis(data, s.grid.n_points, axis, mat);
  return data;
}

}  // namespace

LatticeGrid::LatticeGrid(int n_points, double spacing)
    : n_points(n_points), spacing(spacing) {
  if (n_points < 3 || n_points % 2 == 0) {
    throw UsageError("n_points must be odd and >= 3");
  }
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw UsageError("spacing must be positive and finite");
  }
}

double LatticeGrid::wavenumber(int m) const { return kTwoPi * m / box_length(); }

ScalarField::ScalarField(const LatticeGrid& grid)
    : grid(grid), values(grid.n_sites(), 0.0) {}

ScalarField::ScalarField(const LatticeGrid& grid, std::vector<double> values)
    : grid(grid), values(std::move(values)) {
  if (this->values.size() != grid.n_sites()) {
    throw DimensionMismatch("scalar field needs n_points^3 values");
  }
  check_finite(this->values);
}

VectorField::VectorField(const LatticeGrid& grid)
    : components{ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}

VectorField::VectorField(ScalarField c1, ScalarField c2, ScalarField c3)
    : components{std::move(c1), std::move(c2), std::move(c3)} {
  if (!(components[0].grid == components[1].grid &&
        components[0].grid == components[2].grid)) {
    throw GridMismatch("vector field components must share one grid");
  }
}

ComplexSpectrum::ComplexSpectrum(const LatticeGrid& grid)
    : grid(grid), coefficients(grid.n_sites(), {0.0, 0.0}) {}

ComplexSpectrum::ComplexSpectrum(const LatticeGrid& grid,
                                 std::vector<std::complex<double>> coefficients)
    : grid(grid), coefficients(std::move(coefficients)) {
  if (this->coefficients.size() != grid.n_sites()) {
    throw DimensionMismatch("spectrum needs n_points^3 coefficients");
  }
}

double reality_asymmetry(const ComplexSpectrum& s) {
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t m = 0; m < s.coefficients.size(); ++m) {
    const std::size_t mc = s.grid.conjugate_mode_index(m);
    worst = std::max(worst, std::abs(s.coefficients[mc] - std::conj(s.coefficients[m])));
    scale = std::max(scale, std::abs(s.coefficients[m]));
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

ComplexSpectrum dft_forward(const ScalarField& f) {
  std::vector<std::complex<double>> data(f.values.begin(), f.values.end());
  const auto mat = analysis_matrix(f.grid.n_points);
  for (int axis = 0; axis < 3; ++axis) apply_along_axis(data, f.grid.n_points, axis, mat);
  return {f.grid, std::move(data)};
}

ScalarField dft_inverse(const ComplexSpectrum& s) {
  if (reality_asymmetry(s) > 1e-10) {
    throw SymmetryViolation("spectrum violates the conjugate symmetry of a real field");
  }
  const auto data = synthesize(s);
  std::vector<double> values(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) values[i] = data[i].real();
  return {s.grid, std::move(values)};
}

ScalarField spectral_laplacian(const ScalarField& f) {
  ComplexSpectrum s = dft_forward(f);
  for (std::size_t m = 0; m < s.coefficients.size(); ++m) {
    s.coefficients[m] *= -s.grid.wavevector_squared(s.grid.mode_coords(m));
  }
  return dft_inverse(s);
}

VectorField spectral_gradient(const ScalarField& f) {
  const ComplexSpectrum s = dft_forward(f);
  VectorField out(f.grid);
  for (int axis = 0; axis < 3; ++axis) {
    ComplexSpectrum d = s;
    for (std::size_t m = 0; m < d.coefficients.size(); ++m) {
      const double k = d.grid.wavenumber(d.grid.mode_coords(m)[axis]);
      d.coefficients[m] *= std::complex<double>{0.0, k};
    }
    out[axis] = dft_inverse(d);
  }
  return out;
}

ScalarField spectral_divergence(const VectorField& v) {
  ComplexSpectrum acc(v.grid());
  for (int axis = 0; axis < 3; ++axis) {
    const ComplexSpectrum s = dft_forward(v[axis]);
    for (std::size_t m = 0; m < acc.coefficients.size(); ++m) {
      const double k = s.grid.wavenumber(s.grid.mode_coords(m)[axis]);
      acc.coefficients[m] += std::complex<double>{0.0, k} * s.coefficients[m];
    }
  }
  return dft_inverse(acc);
}

VectorField spectral_curl(const VectorField& v) {
  const std::array<ComplexSpectrum, 3> s{dft_forward(v[0]), dft_forward(v[1]),
                                         dft_forward(v[2])};
  const LatticeGrid& grid = v.grid();
  VectorField out(grid);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int l = (i + 2) % 3;
    ComplexSpectrum c(grid);
    for (std::size_t m = 0; m < c.coefficients.size(); ++m) {
      const auto k = grid.wavevector(grid.mode_coords(m));
      c.coefficients[m] = std::complex<double>{0.0, 1.0} *
                          (k[j] * s[l].coefficients[m] - k[l] * s[j].coefficients[m]);
    }
    out[i] = dft_inverse(c);
  }
  return out;
}

}  // namespace ciq
