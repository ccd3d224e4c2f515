// SPDX-License-Identifier: Apache-2.0
//
// Geodesic distances on sampled conformal metrics, hyperbolic closed
// forms, and numerical checkers for the comparison inequality (distance
// domination by the hyperbolic metric), its superharmonicity corollary,
// and the truncated-disk lower bound.

#pragma once

#include <optional>
#include <vector>

#include "minsurf/grid.hpp"

namespace minsurf {

// Largest one-sided overestimate of grid shortest paths against straight
// lines for the 32-move stencil (gaps of at most 18.435 degrees between
// move directions give 1/cos(9.2175 deg) - 1).
inline constexpr double kMetricationBound = 0.0131;

// Slack used by every lemma-style check; metrication bound rounded up.
inline constexpr double kGridSlack = 0.015;

// Single-source shortest paths on the grid graph. Moves: king steps,
// knight steps, and the (3,1)/(3,2) families (32 neighbors); edge weight
// is the Euclidean step length times the mean of the endpoint lambdas.
// Deterministic. Throws UnreachableError when the source is masked out.
DistanceField geodesic_distances(const GridMetric& metric, int i, int j);

// One backward pass seeded on the whole boundary ring; dist is the
// geodesic distance to the boundary for every masked cell.
DistanceField boundary_distance_field(const GridMetric& metric);

// Masked cells with an unmasked 8-neighbor or touching the grid edge.
std::vector<std::size_t> boundary_ring(const GridMetric& metric);

// Minimum over the boundary ring of distances from cell (i, j).
double dist_to_boundary(const GridMetric& metric, int i, int j);

// log((1 + |z|) / (1 - |z|)); requires |z| < 1.
double hyperbolic_rho(Complex z);

// Euclidean radius of the disk with hyperbolic radius R >= 0:
// (e^R - 1) / (e^R + 1), in [0, 1), monotone in R.
double radius_from_R(double R);

struct ComparisonOptions {
  // Curvature hypothesis band: require -1 - tol <= K <= tol on interior
  // cells. Wide enough to absorb the discrete-curvature error near the
  // mask boundary at n >= 129.
  double curvature_tol = 5e-2;
  // Boundary-distance hypothesis band as a fraction of R, on top of the
  // half-cell integration deficit at the ring.
  double distance_tol = kGridSlack;
};

struct ComparisonResult {
  // min over masked cells of (rho - rho_hat) / rho_hat, where rho is the
  // grid distance from the center and rho_hat(z) = log((1+r|z|)/(1-r|z|))
  // with r = radius_from_R(R). Predicted >= 0 up to grid slack.
  double min_slack_rel = 0.0;
  double min_slack_abs = 0.0;
  std::size_t argmin_cell = 0;
  // Set when the boundary-distance hypothesis holds only within the
  // discretization band and the check cannot distinguish marginal failure
  // from grid error.
  bool hypothesis_warn = false;
  double k_min = 0.0;
  double k_max = 0.0;
  double boundary_distance = 0.0;
};

// Checks the comparison inequality on a metric given over the unit
// parameter disk that represents a geodesic disk of hyperbolic radius R.
// Hypotheses (curvature in [-1, 0], center-to-boundary distance >= R) are
// gated first; HypothesisError signals the check is inapplicable.
ComparisonResult comparison_check(const GridMetric& metric, double R,
                                  const ComparisonOptions& opts = {});

struct SuperharmonicityOptions {
  // Cells within this Chebyshev distance of the source are excluded.
  // Grid shortest paths have conical kinks at the stencil's move
  // directions; within d cells of the source they contribute up to
  // ~0.33/d to the scaled Laplacian, so the collar is sized to push that
  // envelope below 1e-2.
  int collar_cells = 33;
};

struct SuperharmonicityResult {
  // max over tested cells of the h^2-scaled 5-point Laplacian of
  // f(rho) = log((e^rho - 1)/(e^rho + 1)); superharmonicity predicts <= 0
  // up to discretization noise.
  double max_laplacian = 0.0;
  std::size_t argmax_cell = 0;
  std::size_t tested_cells = 0;
  std::size_t collar_cells_excluded = 0;
};

SuperharmonicityResult superharmonicity_check(const DistanceField& rho,
                                              const GridMetric& metric,
                                              const SuperharmonicityOptions& opts = {});

struct TruncationCheck {
  double R = 0.0;
  bool passed = false;
  double worst_margin = 0.0;  // min over samples of rho - (1 - slack) * bound
  bool hypothesis_warn = false;
};

// For each metric (on the unit parameter disk, hyperbolic radius R_k),
// verifies rho_k(z) >= log((1 + r_k |z|)/(1 - r_k |z|)) - slack at the
// given sample cells.
std::vector<TruncationCheck> lemma22_lower_bound(
    const std::vector<GridMetric>& metrics, const std::vector<double>& radii,
    const std::vector<std::pair<int, int>>& sample_cells,
    const ComparisonOptions& opts = {});

}  // namespace minsurf
