// SPDX-License-Identifier: Apache-2.0
//
// Sampled omission diagnostics for a surface's Gauss map against a set of
// hyperplanes. A positive sampled minimum does not certify omission
// off-grid; margins are reported, never proofs.

#pragma once

#include <vector>

#include "minsurf/projgeom.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

struct PlaneMargin {
  std::size_t plane_index = 0;
  double min_margin = 0.0;
  // Cell-center coordinates of the sampled minimum.
  double argmin_u = 0.0;
  double argmin_v = 0.0;
};

// Minimum incidence margin of the Gauss map against each plane over the
// grid_n x grid_n disk mask of the domain (the same mask used for
// sampled metrics). Row-major scan; ties keep the first cell.
std::vector<PlaneMargin> omission_margin(const WeierstrassData& data,
                                         const HyperplaneSet& set, int grid_n);

// alpha(g(z)) / beta(g(z)) for covectors a, b under the linear pairing;
// independent of the homogeneous representative. Throws
// DivisionByIncidence when the denominator margin falls below kPoleTol.
Complex coordinate_function(const WeierstrassData& data, const Hyperplane& a,
                            const Hyperplane& b, Complex z);

}  // namespace minsurf
