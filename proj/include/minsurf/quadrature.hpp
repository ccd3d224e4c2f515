// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace minsurf {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Nodes and weights of the n-point Gauss-Legendre rule, n in [1, 64].
// Results are cached per order.
const GaussLegendreRule& gauss_legendre(int n);

}  // namespace minsurf
