#include "ciq/momentum_rep.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "ciq/helmholtz.hpp"

namespace ciq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_canonical(const std::array<int, 3>& m) {
  if (m[0] != 0) return m[0] > 0;
  if (m[1] != 0) return m[1] > 0;
  return m[2] > 0;
}

std::array<double, 3> unit_wavevector(const LatticeGrid& grid,
                                      const std::array<int, 3>& m) {
  auto k = grid.wavevector(m);
  const double norm = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
  return {k[0] / norm, k[1] / norm, k[2] / norm};
}

std::array<double, 3> cross(const std::array<double, 3>& a,
                            const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// Weight of site x in the extraction alpha(m) = Re fhat + Im fhat:
// (cos(2 pi m.x / n) - sin(2 pi m.x / n)) / n^3.
double extraction_weight(const LatticeGrid& grid, const std::array<int, 3>& m,
                         const std::array<int, 3>& x) {
  const int n = grid.n_points;
  const long long phase = static_cast<long long>(m[0]) * x[0] +
                          static_cast<long long>(m[1]) * x[1] +
                          static_cast<long long>(m[2]) * x[2];
  const double angle = kTwoPi * static_cast<double>(((phase % n) + n) % n) / n;
  return (std::cos(angle) - std::sin(angle)) / static_cast<double>(grid.n_sites());
}

}  // namespace

PolarizationBasis build_polarization_basis(const LatticeGrid& grid) {
  PolarizationBasis basis{grid,
                          std::vector<std::array<double, 3>>(grid.n_sites(), {0, 0, 0}),
                          std::vector<std::array<double, 3>>(grid.n_sites(), {0, 0, 0})};
  for (std::size_t mode = 0; mode < grid.n_sites(); ++mode) {
    const auto m = grid.mode_coords(mode);
    if ((m[0] == 0 && m[1] == 0 && m[2] == 0) || !is_canonical(m)) continue;

    const auto khat = unit_wavevector(grid, m);
    int axis = 0;
    for (int i = 1; i < 3; ++i) {
      if (std::abs(khat[i]) < std::abs(khat[axis])) axis = i;
    }
    std::array<double, 3> e1{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) e1[i] = (i == axis ? 1.0 : 0.0) - khat[axis] * khat[i];
    const double norm = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (double& c : e1) c /= norm;
    const auto e2 = cross(khat, e1);

    basis.eps1[mode] = e1;
    basis.eps2[mode] = e2;
    const std::size_t conj = grid.conjugate_mode_index(mode);
    basis.eps1[conj] = e1;
    basis.eps2[conj] = {-e2[0], -e2[1], -e2[2]};
  }
  return basis;
}

double check_closure(const PolarizationBasis& basis) {
  const LatticeGrid& grid = basis.grid;
  double worst = 0.0;
  for (std::size_t mode = 0; mode < grid.n_sites(); ++mode) {
    const auto m = grid.mode_coords(mode);
    if (m[0] == 0 && m[1] == 0 && m[2] == 0) continue;
    const auto khat = unit_wavevector(grid, m);
    const auto& e1 = basis.eps1[mode];
    const auto& e2 = basis.eps2[mode];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double target = (i == j ? 1.0 : 0.0) - khat[i] * khat[j];
        worst = std::max(worst,
                         std::abs(e1[i] * e1[j] + e2[i] * e2[j] - target));
      }
    }
  }
  return worst;
}

ScalarModeCoefficients scalar_to_alpha(const ScalarField& f) {
  const ComplexSpectrum s = dft_forward(f);
  ScalarModeCoefficients alpha{f.grid, std::vector<double>(f.grid.n_sites())};
  for (std::size_t m = 0; m < alpha.values.size(); ++m) {
    alpha.values[m] = s.coefficients[m].real() + s.coefficients[m].imag();
  }
  return alpha;
}

ScalarField alpha_to_scalar(const ScalarModeCoefficients& alpha) {
  const LatticeGrid& grid = alpha.grid;
  ComplexSpectrum s(grid);
  for (std::size_t m = 0; m < s.coefficients.size(); ++m) {
    const double here = alpha.values[m];
    const double mirror = alpha.values[grid.conjugate_mode_index(m)];
    s.coefficients[m] = {0.5 * (here + mirror), 0.5 * (here - mirror)};
  }
  return dft_inverse(s);
}

TransverseModeCoefficients vector_to_alphabeta(const VectorField& v,
                                               const PolarizationBasis& basis) {
  const LatticeGrid& grid = v.grid();
  if (!(grid == basis.grid)) throw GridMismatch("field and basis grids differ");

  double scale = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (double value : v[i].values) scale = std::max(scale, std::abs(value));
  }
  const VectorField longitudinal = longitudinal_project(v);
  double residue = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (double value : longitudinal[i].values) residue = std::max(residue, std::abs(value));
  }
  if (residue > 1e-10 * std::max(scale, 1e-300)) {
    throw NotTransverse("field has a longitudinal component");
  }

  const std::array<ComplexSpectrum, 3> s{dft_forward(v[0]), dft_forward(v[1]),
                                         dft_forward(v[2])};
  TransverseModeCoefficients out{grid,
                                 {std::vector<double>(grid.n_sites(), 0.0),
                                  std::vector<double>(grid.n_sites(), 0.0)},
                                 {0.0, 0.0, 0.0}};
  const std::size_t zero = grid.mode_index(0, 0, 0);
  for (std::size_t m = 0; m < grid.n_sites(); ++m) {
    if (m == zero) {
      for (int i = 0; i < 3; ++i) out.zero_mode[i] = s[i].coefficients[m].real();
      continue;
    }
    for (int lambda = 1; lambda <= 2; ++lambda) {
      const auto& eps = basis.eps(lambda, m);
      std::complex<double> c{0.0, 0.0};
      for (int i = 0; i < 3; ++i) c += s[i].coefficients[m] * eps[i];
      out.lambda_values[lambda - 1][m] = c.real() + c.imag();
    }
  }
  return out;
}

VectorField alphabeta_to_vector(const TransverseModeCoefficients& coeffs,
                                const PolarizationBasis& basis) {
  const LatticeGrid& grid = coeffs.grid;
  if (!(grid == basis.grid)) throw GridMismatch("coefficients and basis grids differ");
  std::array<ComplexSpectrum, 3> s{ComplexSpectrum(grid), ComplexSpectrum(grid),
                                   ComplexSpectrum(grid)};
  const std::size_t zero = grid.mode_index(0, 0, 0);
  for (std::size_t m = 0; m < grid.n_sites(); ++m) {
    if (m == zero) {
      for (int i = 0; i < 3; ++i) s[i].coefficients[m] = coeffs.zero_mode[i];
      continue;
    }
    const std::size_t conj = grid.conjugate_mode_index(m);
    const double a1 = coeffs.lambda_values[0][m];
    const double a1m = coeffs.lambda_values[0][conj];
    const double a2 = coeffs.lambda_values[1][m];
    const double a2m = coeffs.lambda_values[1][conj];
    // eps1 is even in m, so its coefficient combines like a scalar;
    // eps2 is odd, which flips the sign of the mirrored term.
    const std::complex<double> c1{0.5 * (a1 + a1m), 0.5 * (a1 - a1m)};
    const std::complex<double> c2{0.5 * (a2 - a2m), 0.5 * (a2 + a2m)};
    for (int i = 0; i < 3; ++i) {
      s[i].coefficients[m] = c1 * basis.eps1[m][i] + c2 * basis.eps2[m][i];
    }
  }
  return {dft_inverse(s[0]), dft_inverse(s[1]), dft_inverse(s[2])};
}

double momentum_hamiltonian_kg(const ScalarModeCoefficients& alpha,
                               const ScalarModeCoefficients& beta, double mass) {
  const LatticeGrid& grid = alpha.grid;
  if (!(grid == beta.grid)) throw GridMismatch("alpha and beta grids differ");
  const double volume = std::pow(grid.box_length(), 3);
  double sum = 0.0;
  for (std::size_t m = 0; m < grid.n_sites(); ++m) {
    const double k2 = grid.wavevector_squared(grid.mode_coords(m));
    sum += beta.values[m] * beta.values[m] +
           (mass * mass + k2) * alpha.values[m] * alpha.values[m];
  }
  return 0.5 * volume * sum;
}

double momentum_hamiltonian_maxwell(const TransverseModeCoefficients& alpha,
                                    const TransverseModeCoefficients& beta) {
  const LatticeGrid& grid = alpha.grid;
  if (!(grid == beta.grid)) throw GridMismatch("alpha and beta grids differ");
  const double volume = std::pow(grid.box_length(), 3);
  const std::size_t zero = grid.mode_index(0, 0, 0);
  double sum = 0.0;
  for (std::size_t m = 0; m < grid.n_sites(); ++m) {
    if (m == zero) continue;
    const double k2 = grid.wavevector_squared(grid.mode_coords(m));
    for (int l = 0; l < 2; ++l) {
      sum += beta.lambda_values[l][m] * beta.lambda_values[l][m] +
             k2 * alpha.lambda_values[l][m] * alpha.lambda_values[l][m];
    }
  }
  for (int i = 0; i < 3; ++i) sum += beta.zero_mode[i] * beta.zero_mode[i];
  return 0.5 * volume * sum;
}

ExtractionMaps kg_mode_maps(const LatticeGrid& grid) {
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  Eigen::MatrixXd map = Eigen::MatrixXd::Zero(v, v);
  for (Eigen::Index m = 0; m < v; ++m) {
    const auto mode = grid.mode_coords(static_cast<std::size_t>(m));
    for (Eigen::Index x = 0; x < v; ++x) {
      map(m, x) = extraction_weight(grid, mode, grid.site_coords(static_cast<std::size_t>(x)));
    }
  }
  ExtractionMaps maps;
  maps.alpha = Eigen::MatrixXd::Zero(v, 2 * v);
  maps.beta = Eigen::MatrixXd::Zero(v, 2 * v);
  maps.alpha.leftCols(v) = map;
  maps.beta.rightCols(v) = map;
  return maps;
}

ExtractionMaps maxwell_mode_maps(const LatticeGrid& grid, const PolarizationBasis& basis) {
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  const std::size_t zero = grid.mode_index(0, 0, 0);
  const Eigen::Index rows = 2 * (v - 1) + 3;
  Eigen::MatrixXd map = Eigen::MatrixXd::Zero(rows, 3 * v);
  for (Eigen::Index m = 0; m < v; ++m) {
    const std::size_t mode = static_cast<std::size_t>(m);
    const auto coords = grid.mode_coords(mode);
    if (mode == zero) continue;
    const Eigen::Index row_base = m < static_cast<Eigen::Index>(zero) ? m : m - 1;
    for (Eigen::Index x = 0; x < v; ++x) {
      const double w =
          extraction_weight(grid, coords, grid.site_coords(static_cast<std::size_t>(x)));
      for (int lambda = 0; lambda < 2; ++lambda) {
        const auto& eps = lambda == 0 ? basis.eps1[mode] : basis.eps2[mode];
        for (int j = 0; j < 3; ++j) {
          map(lambda * (v - 1) + row_base, j * v + x) = w * eps[j];
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (Eigen::Index x = 0; x < v; ++x) {
      map(2 * (v - 1) + i, i * v + x) = 1.0 / static_cast<double>(grid.n_sites());
    }
  }
  ExtractionMaps maps;
  maps.alpha = Eigen::MatrixXd::Zero(rows, 6 * v);
  maps.beta = Eigen::MatrixXd::Zero(rows, 6 * v);
  maps.alpha.leftCols(3 * v) = map;
  maps.beta.rightCols(3 * v) = map;
  return maps;
}

ModeBracketTable bracket_in_modes(const Eigen::MatrixXd& theta,
                                  const ExtractionMaps& maps) {
  if (maps.alpha.cols() != theta.rows() || theta.rows() != theta.cols() ||
      maps.beta.cols() != theta.cols()) {
    throw DimensionMismatch("extraction maps do not match the bracket matrix");
  }
  ModeBracketTable table;
  table.alpha_beta = maps.alpha * theta * maps.beta.transpose();
  table.alpha_alpha = maps.alpha * theta * maps.alpha.transpose();
  table.beta_beta = maps.beta * theta * maps.beta.transpose();
  return table;
}

}  // namespace ciq
