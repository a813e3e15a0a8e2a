#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "specgap/eigensolver.hpp"
#include "specgap/errors.hpp"
#include "specgap/step_delta.hpp"

using namespace specgap;
using std::numbers::pi;

namespace {

ProblemSpec physical(Potential p, double L, double t = 1.0) {
  return {std::move(p), L, Frame::Physical, t};
}

ProblemSpec scaled(Potential p, double L, double t = 1.0) {
  return {std::move(p), L, Frame::Scaled, t};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Potential random_potential(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.2, 3.0);
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return Potential::step(u(rng), u(rng));
    case 1: return Potential::inverse_square_tail();
    case 2: return Potential::power_law(u(rng), 2.0 + u(rng));
    case 3: return Potential::bump(u(rng), u(rng));
    default: return Potential::piecewise({{-1.5, -0.5, u(rng)}, {0.25, 1.0, u(rng)}});
  }
}

}  // namespace

TEST_CASE("free particle") {
  auto r = lowest_eigenvalues_fd(physical(Potential::zero(), pi), 2, 40);
  CHECK(rel(r.eigenvalues[0], 1.0) < 1e-6);
  CHECK(rel(r.eigenvalues[1], 4.0) < 1e-6);

  auto g1 = spectral_gap(physical(Potential::zero(), 1.0), 40);
  CHECK(rel(g1.gap, 3 * pi * pi) < 1e-6);
  auto g10 = spectral_gap(physical(Potential::zero(), 10.0), 40);
  CHECK(rel(g10.gap, 3 * pi * pi / 100) < 1e-6);
}

TEST_CASE("scaled step matches the matching-equation solver") {
  const auto analytic = step_gap_scaled(1, 1, 10);
  auto r = lowest_eigenvalues_fd(scaled(Potential::step(1, 1), 10), 2, 160);
  CHECK(rel(r.eigenvalues[0], analytic.omega0 * analytic.omega0) < 1e-6);
  CHECK(rel(r.eigenvalues[1], analytic.omega1 * analytic.omega1) < 1e-6);
}

TEST_CASE("result invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const double L = std::uniform_real_distribution<double>(2.0, 60.0)(rng);
    auto spec = physical(random_potential(rng), L);
    const double res = std::max(24.0, minimum_resolution(spec));
    auto r = lowest_eigenvalues_fd(spec, 4, res);
    REQUIRE(r.eigenvalues.size() == 4);
    CHECK(r.eigenvalues[0] < r.eigenvalues[1]);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(r.error_estimates[j] > 0.0);
      double norm = 0.0;
      for (double f : r.eigenfunctions[j]) norm += f * f;
      norm *= r.grid.spacing();
      CHECK(std::abs(norm - 1.0) < 1e-10);
      CHECK(r.eigenfunctions[j].front() > 0.0);
      CHECK(eigenfunction_nodes(r, j) == static_cast<int>(j));
    }
    // Domain lower bound from min-max against the free ground state.
    CHECK(r.eigenvalues[0] >= pi * pi / (L * L) - r.error_estimates[0]);
  }
}

TEST_CASE("first excited state of the free problem vanishes at the centre") {
  auto r = lowest_eigenvalues_fd(physical(Potential::zero(), 1.0), 2, 64);
  REQUIRE(eigenfunction_nodes(r, 1) == 1);
  const auto& f = r.eigenfunctions[1];
  std::size_t i = 0;
  while (f[i] * f[i + 1] > 0) ++i;
  const double h = r.grid.spacing();
  CHECK(std::abs(r.grid.node(i) - 0.0) <= h);
  CHECK(std::abs(r.grid.node(i + 1) - 0.0) <= h);
  CHECK(eigenfunction_at(r, 1, 0.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(eigenfunction_at(r, 0, -0.5) == 0.0);
  CHECK(eigenfunction_at(r, 0, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
}

TEST_CASE("frame equivalence") {
  SUBCASE("step, L=10") {
    auto phys = spectral_gap(physical(Potential::step(1, 1), 10), 40);
    auto scal = spectral_gap(scaled(Potential::step(1, 1), 10), 400);
    CHECK(std::abs(phys.gap - scal.gap / 100) <= phys.gap_error + scal.gap_error / 100 + 1e-14);
  }
  SUBCASE("randomised, matching grids") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      const double L = std::uniform_real_distribution<double>(3.0, 200.0)(rng);
      const auto p = random_potential(rng);
      const double res = std::max(24.0, minimum_resolution(physical(p, L)));
      auto a = lowest_eigenvalues_fd(physical(p, L), 2, res, {false});
      auto b = lowest_eigenvalues_fd(scaled(p, L), 2, res * L, {false});
      REQUIRE(a.grid.n == b.grid.n);
      for (std::size_t j = 0; j < 2; ++j) {
        const double tol = a.error_estimates[j] + b.error_estimates[j] / (L * L);
        CHECK(std::abs(a.eigenvalues[j] - b.eigenvalues[j] / (L * L)) <= tol);
      }
    }
  }
}

TEST_CASE("ground state is monotone in the coupling") {
  const auto p = Potential::bump(3, 1);
  double prev = -1.0;
  for (double t : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    auto r = lowest_eigenvalues_fd(physical(p, 20, t), 1, 40, {false});
    CHECK(r.eigenvalues[0] >= prev);
    prev = r.eigenvalues[0];
  }
}

TEST_CASE("convergence order") {
  // Raw central differences: O(h^2). Extrapolated: O(h^4).
  const auto spec = physical(Potential::zero(), 1.0);
  const double exact = pi * pi;
  double prev_raw = 0.0;
  double prev_ext = 0.0;
  for (int level = 0; level < 5; ++level) {
    const double res = 20.0 * std::pow(2.0, level);
    const Grid g = make_grid(spec, res);
    const double raw = std::abs(fd_eigenvalues(spec, g, 1)[0] - exact);
    const double ext = std::abs(lowest_eigenvalues_fd(spec, 1, res, {false}).eigenvalues[0] - exact);
    if (level > 0) {
      CHECK(std::log2(prev_raw / raw) >= 1.9);
      if (level < 3) CHECK(std::log2(prev_ext / ext) >= 3.5);
    }
    prev_raw = raw;
    prev_ext = ext;
  }
}

TEST_CASE("jump sampling") {
  const auto spec = physical(Potential::step(2, 1), 4);
  Grid g{-2.0, 2.0, 15};  // h = 0.25, nodes on the jumps at -1 and 1
  auto v = sample_potential(spec, g);
  CHECK(v[3] == doctest::Approx(1.0));
  CHECK(v[11] == doctest::Approx(1.0));
  CHECK(v[7] == 2.0);
  CHECK(v[0] == 0.0);
  Grid off{-2.0, 2.0, 16};
  auto w = sample_potential(spec, off);
  double mass = 0.0;
  for (double x : w) mass += x * off.spacing();
  CHECK(mass == doctest::Approx(4.0));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(lowest_eigenvalues_fd(scaled(Potential::step(1, 1), 10), 2, 40), ResolutionError);
  CHECK_THROWS_AS(lowest_eigenvalues_fd(physical(Potential::zero(), 1), 0, 40), std::invalid_argument);
  CHECK_THROWS_AS(lowest_eigenvalues_fd(physical(Potential::zero(), 1), 9, 40), std::invalid_argument);
  CHECK_THROWS_AS(lowest_eigenvalues_fd(physical(Potential::zero(), -1), 2, 40), std::invalid_argument);
  CHECK_THROWS_AS(lowest_eigenvalues_fd(physical(Potential::zero(), 1, -1), 2, 40), std::invalid_argument);
  // A tall central wall splits the box into two nearly decoupled wells; the
  // tunnelling splitting is far below any attainable error estimate.
  const auto wall = Potential::piecewise({{-1, 1, 1e4}});
  CHECK_THROWS_AS(spectral_gap(physical(wall, 10), 40), PrecisionError);
}

TEST_CASE("minimum grid size") {
  const Grid g = make_grid(physical(Potential::zero(), 0.01), 40);
  CHECK(g.n == kMinInteriorNodes);
  CHECK(g.node(0) > g.a);
  CHECK(g.node(g.n - 1) < g.b);
}
