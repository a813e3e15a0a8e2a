#include "specgap/hellmann_feynman.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace specgap {

double DensityDifference::integral() const {
  double sum = 0.0;
  for (double v : psi) sum += v;
  return grid.spacing() * sum;
}

double DensityDifference::integrate_against(std::span<const double> f) const {
  if (f.size() != psi.size()) throw std::invalid_argument("sample count mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) sum += f[i] * psi[i];
  return grid.spacing() * sum;
}

double DensityDifference::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0, j = psi.size() - 1; i < j; ++i, --j)
    worst = std::max(worst, std::abs(psi[i] - psi[j]));
  return worst;
}

int DensityDifference::positive_axis_crossings() const {
  int count = 0;
  int last = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (grid.node(i) <= 0.0) continue;
    const int s = (psi[i] > 0.0) - (psi[i] < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

DensityDifference psi_L(const ProblemSpec& spec, double resolution) {
  const auto result = lowest_eigenvalues_fd(spec, 2, resolution);
  DensityDifference d;
  d.grid = result.grid;
  const auto& phi0 = result.eigenfunctions[0];
  const auto& phi1 = result.eigenfunctions[1];
  d.psi.resize(phi0.size());
  for (std::size_t i = 0; i < phi0.size(); ++i) d.psi[i] = phi1[i] * phi1[i] - phi0[i] * phi0[i];

  // Innermost crossing on x > 0; the node at (or just left of) the centre
  // supplies the starting sign.
  const Grid& g = d.grid;
  std::size_t i = 0;
  while (i + 1 < g.n && g.node(i + 1) <= 0.0) ++i;
  for (; i + 1 < g.n; ++i) {
    const double a = d.psi[i];
    const double b = d.psi[i + 1];
    if (b == 0.0 && g.node(i + 1) > 0.0) {
      d.crossing_radius = g.node(i + 1);
      break;
    }
    if ((a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0)) {
      const double x = g.node(i) + g.spacing() * a / (a - b);
      if (x > 0.0) {
        d.crossing_radius = x;
        break;
      }
    }
  }
  return d;
}

double gap_derivative(const ProblemSpec& spec, const Potential& p, double resolution) {
  const auto d = psi_L(spec, resolution);
  ProblemSpec unit = spec;
  unit.potential = p;
  unit.t_coupling = 1.0;
  return d.integrate_against(sample_potential(unit, d.grid));
}

std::vector<TSweepRow> t_sweep(const Potential& p, double L, std::span<const double> t_grid,
                               double resolution, unsigned workers) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0)) throw std::invalid_argument("t grid must be non-negative");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw std::invalid_argument("t grid must be increasing");
  }
  std::vector<TSweepRow> rows(t_grid.size());
  detail::parallel_for(t_grid.size(), workers, [&](std::size_t i) {
    const double t = t_grid[i];
    auto gap_at = [&](double tc) { return spectral_gap(ProblemSpec{p, L, Frame::Physical, tc}, resolution).gap; };
    const ProblemSpec spec{p, L, Frame::Physical, t};
    const double delta = kCouplingStep;
    auto& row = rows[i];
    row.t = t;
    row.gap = gap_at(t);
    row.hf_deriv = gap_derivative(spec, p, resolution);
    if (t >= delta)
      row.fd_deriv = (gap_at(t + delta) - gap_at(t - delta)) / (2.0 * delta);
    else
      row.fd_deriv = (-3.0 * row.gap + 4.0 * gap_at(t + delta) - gap_at(t + 2.0 * delta)) / (2.0 * delta);
  });
  return rows;
}

}  // namespace specgap
