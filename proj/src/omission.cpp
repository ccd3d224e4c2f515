// SPDX-License-Identifier: Apache-2.0

#include "minsurf/omission.hpp"

#include <cmath>
#include <stdexcept>

#include "minsurf/errors.hpp"

namespace minsurf {

std::vector<PlaneMargin> omission_margin(const WeierstrassData& data,
                                         const HyperplaneSet& set, int grid_n) {
  if (set.m != data.m())
    throw std::invalid_argument("hyperplane set dimension does not match the surface");

  GridMetric grid;  // mask carrier only
  grid.domain = data.domain();
  grid.n = grid_n;
  grid.mask = disk_mask(grid.domain, grid_n);

  std::vector<PlaneMargin> out(set.planes.size());
  for (std::size_t p = 0; p < set.planes.size(); ++p) {
    out[p].plane_index = p;
    out[p].min_margin = 2.0;  // margins live in [0, 1]
  }

  for (int i = 0; i < grid_n; ++i)
    for (int j = 0; j < grid_n; ++j) {
      if (!grid.mask[grid.index(i, j)]) continue;
      const Complex z = grid.cell_center(i, j);
      const ProjPoint g = gauss_map(data, z);
      for (std::size_t p = 0; p < set.planes.size(); ++p) {
        const double margin = incidence_margin(g, set.planes[p]);
        if (margin < out[p].min_margin) {
          out[p].min_margin = margin;
          out[p].argmin_u = z.real();
          out[p].argmin_v = z.imag();
        }
      }
    }
  return out;
}

Complex coordinate_function(const WeierstrassData& data, const Hyperplane& a,
                            const Hyperplane& b, Complex z) {
  if (a.covector.size() != data.m() || b.covector.size() != data.m())
    throw std::invalid_argument("covector length does not match the surface");
  const ProjPoint g = gauss_map(data, z);
  Complex top(0.0), bottom(0.0);
  double gb = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < data.m(); ++i) {
    top += a.covector[i] * g.homog[i];
    bottom += b.covector[i] * g.homog[i];
    gb += std::norm(g.homog[i]);
    nb += std::norm(b.covector[i]);
  }
  // Scale-invariant incidence guard: margin below kPoleTol means z lies on
  // the hyperplane of b to working precision.
  if (std::abs(bottom) < kPoleTol * std::sqrt(gb * nb))
    throw DivisionByIncidence("coordinate function evaluated on the denominator hyperplane");
  return top / bottom;
}

}  // namespace minsurf
