#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ciq/helmholtz.hpp"
#include "ciq/lattice.hpp"
#include "ciq/random.hpp"

using namespace ciq;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ScalarField random_field(const LatticeGrid& grid, std::uint64_t seed) {
  Rng rng(seed);
  ScalarField f(grid);
  for (double& v : f.values) v = rng.symmetric();
  return f;
}

VectorField random_vector(const LatticeGrid& grid, std::uint64_t seed) {
  return {random_field(grid, seed), random_field(grid, seed + 1),
          random_field(grid, seed + 2)};
}

double max_abs(const VectorField& v) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (double value : v[i].values) worst = std::max(worst, std::abs(value));
  }
  return worst;
}

double max_abs(const ScalarField& f) {
  double worst = 0.0;
  for (double v : f.values) worst = std::max(worst, std::abs(v));
  return worst;
}

double max_abs_diff(const VectorField& a, const VectorField& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t s = 0; s < a[i].values.size(); ++s) {
      worst = std::max(worst, std::abs(a[i].values[s] - b[i].values[s]));
    }
  }
  return worst;
}

// Independent oracle: the kernel entry as a literal sum over all modes.
std::complex<double> kernel_mode_sum(const LatticeGrid& grid,
                                     const std::array<int, 3>& displacement, int i,
                                     int j) {
  std::complex<double> sum{0.0, 0.0};
  const int h = grid.half();
  for (int m3 = -h; m3 <= h; ++m3) {
    for (int m2 = -h; m2 <= h; ++m2) {
      for (int m1 = -h; m1 <= h; ++m1) {
        const auto k = grid.wavevector({m1, m2, m3});
        const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        double t;
        if (k2 == 0.0) {
          t = (i == j) ? 1.0 : 0.0;
        } else {
          t = ((i == j) ? 1.0 : 0.0) - k[i] * k[j] / k2;
        }
        const double phase = kTwoPi *
                             (m1 * displacement[0] + m2 * displacement[1] +
                              m3 * displacement[2]) /
                             grid.n_points;
        sum += t * std::complex<double>{std::cos(phase), std::sin(phase)};
      }
    }
  }
  const double volume = static_cast<double>(grid.n_sites()) *
                        std::pow(grid.spacing, 3);
  return sum / volume;
}

}  // namespace

TEST_CASE("gradients are purely longitudinal, curls purely transverse") {
  const LatticeGrid grid(5, 0.6);
  const ScalarField f = random_field(grid, 21);
  const VectorField grad = spectral_gradient(f);
  CHECK(max_abs(transverse_project(grad)) < 1e-12);
  CHECK(max_abs_diff(longitudinal_project(grad), grad) < 1e-12);

  const VectorField w = random_vector(grid, 31);
  const VectorField curl = spectral_curl(w);
  CHECK(max_abs_diff(transverse_project(curl), curl) < 1e-12);
  CHECK(max_abs(longitudinal_project(curl)) < 1e-12);
}

TEST_CASE("constant fields stay in the transverse part") {
  const LatticeGrid grid(3, 1.0);
  VectorField v(grid);
  for (int i = 0; i < 3; ++i) {
    for (double& value : v[i].values) value = 1.0 + i;
  }
  CHECK(max_abs_diff(transverse_project(v), v) < 1e-14);
  CHECK(max_abs(longitudinal_project(v)) < 1e-14);
}

TEST_CASE("projector algebra on random fields") {
  const LatticeGrid grid(5, 1.1);
  const VectorField v = random_vector(grid, 41);
  const VectorField vt = transverse_project(v);
  const VectorField vl = longitudinal_project(v);

  // Idempotence.
  CHECK(max_abs_diff(transverse_project(vt), vt) < 1e-12);
  CHECK(max_abs_diff(longitudinal_project(vl), vl) < 1e-12);
  // Mutual annihilation.
  CHECK(max_abs(longitudinal_project(vt)) < 1e-12);
  CHECK(max_abs(transverse_project(vl)) < 1e-12);
  // Completeness.
  VectorField sum = vt;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t s = 0; s < sum[i].values.size(); ++s) {
      sum[i].values[s] += vl[i].values[s];
    }
  }
  CHECK(max_abs_diff(sum, v) < 1e-12);
  // div of the transverse part, curl of the longitudinal part.
  CHECK(max_abs(spectral_divergence(vt)) < 1e-12);
  CHECK(max_abs(spectral_curl(vl)) < 1e-12);
}

TEST_CASE("kernel matches the brute-force mode sum") {
  const LatticeGrid grid(3, 1.0);
  const TransverseKernel kernel = transverse_delta_kernel(grid);
  for (std::size_t d = 0; d < grid.n_sites(); ++d) {
    const auto c = grid.site_coords(d);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const auto oracle = kernel_mode_sum(grid, c, i, j);
        CHECK(std::abs(kernel.at(d, i, j) - oracle.real()) < 1e-13);
        // The imaginary residue of the literal sum stays at rounding level.
        CHECK(std::abs(oracle.imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("kernel symmetries and trace identity") {
  const LatticeGrid grid(5, 0.7);
  const TransverseKernel kernel = transverse_delta_kernel(grid);
  const double volume = static_cast<double>(grid.n_sites()) *
                        std::pow(grid.spacing, 3);
  for (std::size_t d = 0; d < grid.n_sites(); ++d) {
    const auto c = grid.site_coords(d);
    const int n = grid.n_points;
    const std::size_t neg = grid.site_index((n - c[0]) % n, (n - c[1]) % n,
                                            (n - c[2]) % n);
    double trace = 0.0;
    for (int i = 0; i < 3; ++i) {
      trace += kernel.at(d, i, i);
      for (int j = 0; j < 3; ++j) {
        CHECK(kernel.at(d, i, j) == doctest::Approx(kernel.at(d, j, i)).epsilon(1e-14));
        CHECK(kernel.at(d, i, j) == doctest::Approx(kernel.at(neg, i, j)).epsilon(1e-14));
      }
    }
    // tr T = 2 away from k = 0 plus 3 at the zero mode.
    const double expected =
        2.0 * (d == grid.site_index(0, 0, 0) ? 1.0 : 0.0) / std::pow(grid.spacing, 3) +
        1.0 / volume;
    CHECK(std::abs(trace - expected) < 1e-12 / std::pow(grid.spacing, 3));
  }
}

TEST_CASE("kernel convolution applies the transverse projector") {
  const LatticeGrid grid(3, 0.8);
  const TransverseKernel kernel = transverse_delta_kernel(grid);
  const VectorField v = random_vector(grid, 51);
  const VectorField projected = transverse_project(v);
  const double cell = std::pow(grid.spacing, 3);
  const int n = grid.n_points;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t x = 0; x < grid.n_sites(); ++x) {
      const auto cx = grid.site_coords(x);
      double sum = 0.0;
      for (std::size_t y = 0; y < grid.n_sites(); ++y) {
        const auto cy = grid.site_coords(y);
        const std::size_t d = grid.site_index(((cx[0] - cy[0]) % n + n) % n,
                                              ((cx[1] - cy[1]) % n + n) % n,
                                              ((cx[2] - cy[2]) % n + n) % n);
        for (int j = 0; j < 3; ++j) sum += kernel.at(d, i, j) * v[j].values[y];
      }
      CHECK(std::abs(cell * sum - projected[i].values[x]) < 1e-10);
    }
  }
}

TEST_CASE("single axis mode keeps transverse components and drops the third") {
  const LatticeGrid grid(5, 1.0);
  // One spectral mode along k = (0, 0, kappa): the projector acts as
  // diag(1, 1, 0) on the component vector.
  VectorField v(grid);
  for (std::size_t s = 0; s < grid.n_sites(); ++s) {
    const double phase = kTwoPi * grid.site_coords(s)[2] / grid.n_points;
    v[0].values[s] = 1.5 * std::cos(phase);
    v[1].values[s] = -0.5 * std::cos(phase);
    v[2].values[s] = 2.0 * std::cos(phase);
  }
  const VectorField projected = transverse_project(v);
  for (std::size_t s = 0; s < grid.n_sites(); ++s) {
    CHECK(projected[0].values[s] == doctest::Approx(v[0].values[s]).epsilon(1e-12));
    CHECK(projected[1].values[s] == doctest::Approx(v[1].values[s]).epsilon(1e-12));
    CHECK(std::abs(projected[2].values[s]) < 1e-12);
  }
}
