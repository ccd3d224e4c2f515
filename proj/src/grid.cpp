// SPDX-License-Identifier: Apache-2.0

#include "minsurf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "minsurf/errors.hpp"

namespace minsurf {

bool DiskDomain::contains(Complex z, double slack) const {
  return std::abs(z - center) <= radius + slack * std::max(1.0, radius);
}

Complex GridMetric::cell_center(int i, int j) const {
  const double h = spacing();
  return Complex(domain.center.real() - domain.radius + (j + 0.5) * h,
                 domain.center.imag() - domain.radius + (i + 0.5) * h);
}

std::pair<int, int> GridMetric::nearest_cell(Complex z) const {
  const double h = spacing();
  int j = static_cast<int>(std::floor((z.real() - domain.center.real() + domain.radius) / h));
  int i = static_cast<int>(std::floor((z.imag() - domain.center.imag() + domain.radius) / h));
  i = std::clamp(i, 0, n - 1);
  j = std::clamp(j, 0, n - 1);
  return {i, j};
}

std::size_t GridMetric::center_cell() const {
  const int c = (n - 1) / 2;
  return index(c, c);
}

std::vector<std::uint8_t> disk_mask(const DiskDomain& domain, int n) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(n) * n, 0);
  const double h = 2.0 * domain.radius / n;
  for (int i = 0; i < n; ++i) {
    const double v = -domain.radius + (i + 0.5) * h;
    for (int j = 0; j < n; ++j) {
      const double u = -domain.radius + (j + 0.5) * h;
      if (u * u + v * v < domain.radius * domain.radius)
        mask[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  return mask;
}

namespace {

GridMetric make_unit_disk_metric(int n) {
  GridMetric m;
  m.domain = DiskDomain{Complex(0.0, 0.0), 1.0};
  m.n = n;
  m.mask = disk_mask(m.domain, n);
  m.lambda.assign(static_cast<std::size_t>(n) * n, 0.0);
  return m;
}

}  // namespace

GridMetric flat_metric(int n, double value) {
  if (value <= 0.0) throw std::invalid_argument("flat metric factor must be positive");
  GridMetric m = make_unit_disk_metric(n);
  for (std::size_t k = 0; k < m.lambda.size(); ++k)
    if (m.mask[k]) m.lambda[k] = value;
  return m;
}

GridMetric hyperbolic_metric(int n) {
  GridMetric m = make_unit_disk_metric(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = m.index(i, j);
      if (!m.mask[k]) continue;
      const double r2 = std::norm(m.cell_center(i, j));
      m.lambda[k] = 2.0 / (1.0 - r2);
    }
  return m;
}

GridMetric hyperbolic_truncation(int n, double R) {
  if (R <= 0.0) throw std::invalid_argument("truncation radius must be positive");
  const double r = std::tanh(R / 2.0);
  GridMetric m = make_unit_disk_metric(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = m.index(i, j);
      if (!m.mask[k]) continue;
      const double r2 = std::norm(m.cell_center(i, j));
      m.lambda[k] = 2.0 * r / (1.0 - r * r * r2);
    }
  return m;
}

bool curvature_stencil_fits(const GridMetric& metric, int i, int j) {
  for (int di = -2; di <= 2; ++di)
    for (int dj = -2; dj <= 2; ++dj)
      if (!metric.masked(i + di, j + dj)) return false;
  return true;
}

double grid_curvature(const GridMetric& metric, int i, int j) {
  if (!curvature_stencil_fits(metric, i, j))
    throw BoundaryError("curvature stencil leaves the mask");
  const double h = metric.spacing();
  auto logl = [&](int ii, int jj) {
    return std::log(metric.lambda[metric.index(ii, jj)]);
  };
  const double lap = (logl(i + 1, j) + logl(i - 1, j) + logl(i, j + 1) +
                      logl(i, j - 1) - 4.0 * logl(i, j)) /
                     (h * h);
  const double l = metric.lambda[metric.index(i, j)];
  return -lap / (l * l);
}

double DistanceField::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw UnreachableError("distance queried outside the grid");
  const std::size_t k = static_cast<std::size_t>(i) * n + j;
  if (!reached[k]) throw UnreachableError("distance queried at an unreached cell");
  return dist[k];
}

}  // namespace minsurf
