// SPDX-License-Identifier: Apache-2.0
//
// Sampled conformal metrics on disk domains. A GridMetric stores the
// conformal factor lambda at cell centers of an n x n Cartesian grid over
// the domain's bounding square, with a mask marking cells inside the disk.

#pragma once

#include <cstdint>
#include <vector>

#include "minsurf/holo.hpp"

namespace minsurf {

struct DiskDomain {
  Complex center{0.0, 0.0};
  double radius = 1.0;

  // Membership in the closed disk, with relative slack.
  bool contains(Complex z, double slack = 1e-12) const;
};

// Conformal factor sampled at cell centers; ds = lambda |dz|.
// lambda > 0 exactly on masked cells.
struct GridMetric {
  DiskDomain domain;
  int n = 0;
  std::vector<double> lambda;  // n*n, row-major, 0 outside the mask
  std::vector<std::uint8_t> mask;

  double spacing() const { return 2.0 * domain.radius / n; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j);
  }
  // Center of cell (row i, column j); the row runs along Im, the column
  // along Re.
  Complex cell_center(int i, int j) const;
  bool masked(int i, int j) const {
    return i >= 0 && j >= 0 && i < n && j < n && mask[index(i, j)] != 0;
  }
  // Cell containing z, clamped to the grid.
  std::pair<int, int> nearest_cell(Complex z) const;
  // Index of the cell at the domain center.
  std::size_t center_cell() const;
};

// Disk mask for the given resolution: cell centers strictly inside the disk.
std::vector<std::uint8_t> disk_mask(const DiskDomain& domain, int n);

// Constant-factor metric on the unit disk.
GridMetric flat_metric(int n, double value);

// Poincare factor 2 / (1 - |z|^2) on the unit disk.
GridMetric hyperbolic_metric(int n);

// The hyperbolic metric of the sub-disk of Euclidean radius r pulled back
// to the unit parameter disk (w = r z): lambda(z) = 2 r / (1 - r^2 |z|^2).
// Its center-to-boundary distance is exactly R = log((1+r)/(1-r)).
GridMetric hyperbolic_truncation(int n, double R);

// Gauss curvature of the sampled metric at cell (i, j) from the intrinsic
// formula K = -(lap log lambda) / lambda^2 with a 5-point Laplacian,
// O(h^2) accurate. Requires the full 5x5 block around (i, j) to be masked
// (the cell sits at least two cells inside the mask); throws BoundaryError
// otherwise.
double grid_curvature(const GridMetric& metric, int i, int j);

// True when grid_curvature's stencil fits at (i, j).
bool curvature_stencil_fits(const GridMetric& metric, int i, int j);

// Geodesic distances from a source cell (see metricgeo.hpp).
struct DistanceField {
  int n = 0;
  // Source cell index; -1 for a multi-source run seeded at the boundary ring.
  long source = -1;
  std::vector<double> dist;  // +inf where unreached
  std::vector<std::uint8_t> reached;

  // Throws UnreachableError at unreached or masked-out cells.
  double at(int i, int j) const;
};

}  // namespace minsurf
