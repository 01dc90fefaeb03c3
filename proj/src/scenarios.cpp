#include "ciq/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace ciq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 1D displacement kernel of the symbol k^2:
//   kappa(s) = (2 pi / L)^2 (2/n) sum_{f=1..h} f^2 cos(2 pi f s / n).
// The table is mirrored, kappa(n - s) = kappa(s), so matrices built from
// it are exactly symmetric.
std::vector<double> laplacian_table(const LatticeGrid& grid) {
  const int n = grid.n_points;
  const double unit = kTwoPi / grid.box_length();
  std::vector<double> table(n);
  for (int s = 0; s <= n / 2; ++s) {
    double sum = 0.0;
    for (int f = 1; f <= grid.half(); ++f) {
      sum += f * f * std::cos(kTwoPi * ((f * s) % n) / n);
    }
    table[s] = unit * unit * 2.0 * sum / n;
    if (s > 0) table[n - s] = table[s];
  }
  return table;
}

// 1D displacement kernel of the symbol k (without the factor i):
//   sigma(s) = (2 pi / L) (2/n) sum_{f=1..h} f sin(2 pi f s / n),
// mirrored so that sigma(n - s) = -sigma(s) exactly.
std::vector<double> derivative_table(const LatticeGrid& grid) {
  const int n = grid.n_points;
  const double unit = kTwoPi / grid.box_length();
  std::vector<double> table(n, 0.0);
  for (int s = 1; s <= n / 2; ++s) {
    double sum = 0.0;
    for (int f = 1; f <= grid.half(); ++f) {
      sum += f * std::sin(kTwoPi * ((f * s) % n) / n);
    }
    table[s] = unit * 2.0 * sum / n;
    table[n - s] = -table[s];
  }
  return table;
}

int wrap(int delta, int n) { return ((delta % n) + n) % n; }

std::vector<std::array<int, 3>> all_site_coords(const LatticeGrid& grid) {
  std::vector<std::array<int, 3>> coords(grid.n_sites());
  for (std::size_t s = 0; s < coords.size(); ++s) coords[s] = grid.site_coords(s);
  return coords;
}

}  // namespace

KGScenario::KGScenario(const LatticeGrid& grid, double mass) : grid(grid), mass(mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw UsageError("mass must be positive and finite");
  }
}

Eigen::MatrixXd minus_laplacian_matrix(const LatticeGrid& grid) {
  const auto kappa = laplacian_table(grid);
  const auto coords = all_site_coords(grid);
  const int n = grid.n_points;
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(v, v);
  for (Eigen::Index x = 0; x < v; ++x) {
    for (Eigen::Index y = 0; y < v; ++y) {
      const int d0 = wrap(coords[x][0] - coords[y][0], n);
      const int d1 = wrap(coords[x][1] - coords[y][1], n);
      const int d2 = wrap(coords[x][2] - coords[y][2], n);
      double entry = 0.0;
      if (d1 == 0 && d2 == 0) entry += kappa[d0];
      if (d0 == 0 && d2 == 0) entry += kappa[d1];
      if (d0 == 0 && d1 == 0) entry += kappa[d2];
      out(x, y) = entry;
    }
  }
  return out;
}

Eigen::MatrixXd derivative_matrix(const LatticeGrid& grid, int axis) {
  const auto sigma = derivative_table(grid);
  const auto coords = all_site_coords(grid);
  const int n = grid.n_points;
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(v, v);
  for (Eigen::Index x = 0; x < v; ++x) {
    for (Eigen::Index y = 0; y < v; ++y) {
      bool aligned = true;
      for (int m = 0; m < 3; ++m) {
        if (m != axis && coords[x][m] != coords[y][m]) aligned = false;
      }
      if (!aligned) continue;
      out(x, y) = -sigma[wrap(coords[x][axis] - coords[y][axis], n)];
    }
  }
  return out;
}

Eigen::MatrixXd momentum_pair_matrix(const LatticeGrid& grid, int i, int j) {
  const auto coords = all_site_coords(grid);
  const int n = grid.n_points;
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(v, v);
  if (i == j) {
    const auto kappa = laplacian_table(grid);
    for (Eigen::Index x = 0; x < v; ++x) {
      for (Eigen::Index y = 0; y < v; ++y) {
        bool aligned = true;
        for (int m = 0; m < 3; ++m) {
          if (m != i && coords[x][m] != coords[y][m]) aligned = false;
        }
        if (aligned) out(x, y) = kappa[wrap(coords[x][i] - coords[y][i], n)];
      }
    }
    return out;
  }
  // k_i k_j with i != j: (i sigma_i)(i sigma_j) = -sigma_i sigma_j.
  const auto sigma = derivative_table(grid);
  const int third = 3 - i - j;
  for (Eigen::Index x = 0; x < v; ++x) {
    for (Eigen::Index y = 0; y < v; ++y) {
      if (coords[x][third] != coords[y][third]) continue;
      out(x, y) = -sigma[wrap(coords[x][i] - coords[y][i], n)] *
                  sigma[wrap(coords[x][j] - coords[y][j], n)];
    }
  }
  return out;
}

QuadraticSystem build_kg_system(const KGScenario& scenario) {
  const LatticeGrid& grid = scenario.grid;
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  const double cell = std::pow(grid.spacing, 3);

  const Eigen::MatrixXd wave =
      scenario.mass * scenario.mass * Eigen::MatrixXd::Identity(v, v) +
      minus_laplacian_matrix(grid);

  QuadraticSystem sys;
  sys.hamiltonian_form = Eigen::MatrixXd::Zero(2 * v, 2 * v);
  sys.hamiltonian_form.topLeftCorner(v, v) = cell * wave;
  sys.hamiltonian_form.bottomRightCorner(v, v) = cell * Eigen::MatrixXd::Identity(v, v);

  sys.dynamics = Eigen::MatrixXd::Zero(2 * v, 2 * v);
  sys.dynamics.topRightCorner(v, v) = Eigen::MatrixXd::Identity(v, v);
  sys.dynamics.bottomLeftCorner(v, v) = -wave;

  sys.constraints = Eigen::MatrixXd(0, 2 * v);

  sys.labels.reserve(2 * static_cast<std::size_t>(v));
  for (Eigen::Index s = 0; s < v; ++s) {
    sys.labels.push_back({"phi", 0, grid.site_coords(static_cast<std::size_t>(s))});
  }
  for (Eigen::Index s = 0; s < v; ++s) {
    sys.labels.push_back({"pi", 0, grid.site_coords(static_cast<std::size_t>(s))});
  }
  return sys;
}

QuadraticSystem build_maxwell_system(const MaxwellScenario& scenario) {
  const LatticeGrid& grid = scenario.grid;
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  const Eigen::Index d = 6 * v;
  const double cell = std::pow(grid.spacing, 3);

  const Eigen::MatrixXd laplacian = minus_laplacian_matrix(grid);

  QuadraticSystem sys;
  sys.hamiltonian_form = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Eigen::MatrixXd block = -momentum_pair_matrix(grid, i, j);
      if (i == j) block += laplacian;
      sys.hamiltonian_form.block(i * v, j * v, v, v) = cell * block;
    }
    sys.hamiltonian_form.block((3 + i) * v, (3 + i) * v, v, v) =
        cell * Eigen::MatrixXd::Identity(v, v);
  }

  sys.dynamics = Eigen::MatrixXd::Zero(d, d);
  sys.dynamics.topRightCorner(3 * v, 3 * v) = -Eigen::MatrixXd::Identity(3 * v, 3 * v);
  for (int i = 0; i < 3; ++i) {
    sys.dynamics.block((3 + i) * v, i * v, v, v) = laplacian;
  }

  sys.constraints = Eigen::MatrixXd::Zero(2 * v, d);
  for (int j = 0; j < 3; ++j) {
    const Eigen::MatrixXd deriv = derivative_matrix(grid, j);
    sys.constraints.block(0, j * v, v, v) = deriv;
    sys.constraints.block(v, (3 + j) * v, v, v) = deriv;
  }

  sys.labels.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < 3; ++i) {
    for (Eigen::Index s = 0; s < v; ++s) {
      sys.labels.push_back({"A", i, grid.site_coords(static_cast<std::size_t>(s))});
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (Eigen::Index s = 0; s < v; ++s) {
      sys.labels.push_back({"pi", i, grid.site_coords(static_cast<std::size_t>(s))});
    }
  }
  return sys;
}

Eigen::MatrixXd expected_kg_bracket(const LatticeGrid& grid) {
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  const double weight = 1.0 / std::pow(grid.spacing, 3);
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(2 * v, 2 * v);
  theta.topRightCorner(v, v) = weight * Eigen::MatrixXd::Identity(v, v);
  theta.bottomLeftCorner(v, v) = -weight * Eigen::MatrixXd::Identity(v, v);
  return theta;
}

Eigen::MatrixXd expected_maxwell_bracket(const LatticeGrid& grid) {
  const Eigen::Index v = static_cast<Eigen::Index>(grid.n_sites());
  const TransverseKernel kernel = transverse_delta_kernel(grid);
  const auto coords = all_site_coords(grid);
  const int n = grid.n_points;
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(6 * v, 6 * v);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (Eigen::Index x = 0; x < v; ++x) {
        for (Eigen::Index y = 0; y < v; ++y) {
          const std::size_t disp = grid.site_index(wrap(coords[x][0] - coords[y][0], n),
                                                   wrap(coords[x][1] - coords[y][1], n),
                                                   wrap(coords[x][2] - coords[y][2], n));
          const double value = kernel.at(disp, i, j);
          theta(i * v + x, (3 + j) * v + y) = -value;
          theta((3 + j) * v + y, i * v + x) = value;
        }
      }
    }
  }
  return theta;
}

double compare_brackets(const Eigen::MatrixXd& actual, const Eigen::MatrixXd& expected) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
    throw DimensionMismatch("bracket matrices differ in shape");
  }
  return (actual - expected).cwiseAbs().maxCoeff();
}

}  // namespace ciq
