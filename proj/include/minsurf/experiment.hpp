// SPDX-License-Identifier: Apache-2.0
//
// The curvature-distance harness: sup_p |K(p)|^{1/2} d(p) over surfaces
// and families, the point-picking renormalization that pins |K| = 1 at a
// chosen cell, and report emission. The family maximum is a sampled
// lower-bound witness for the constant of the underlying inequality, not
// a bound on it.

#pragma once

#include <string>
#include <vector>

#include "minsurf/metricgeo.hpp"
#include "minsurf/omission.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

struct NamedSurface {
  std::string name;
  WeierstrassData data;
};

struct ExperimentConfig {
  std::vector<NamedSurface> surfaces;
  HyperplaneSet hyperplanes;
  int grid_n = 129;           // >= 64
  int quad_order = 12;
  double omission_threshold = 0.05;  // in (0, 1)
  std::string output = "report";
};

struct SupProduct {
  double sup = 0.0;
  std::size_t argmax_cell = 0;
  Complex argmax_z{0.0, 0.0};
};

// sup over masked cells of |K|^{1/2} d with d the boundary distance from
// one multi-source pass. Ties keep the first cell in row-major order.
SupProduct curvature_distance_product(const WeierstrassData& data, int grid_n);

struct RenormalizeReport {
  double mu = 0.0;            // applied scale factor
  std::size_t p_prime = 0;    // chosen cell
  Complex p_prime_z{0.0, 0.0};
  double k_at_p_prime = 0.0;  // curvature there after rescaling; -1 expected
  double k_min_inner = 0.0;   // extremes over the inner half-disk around p'
  double k_max_inner = 0.0;
  std::size_t inner_cells = 0;
  bool bound_ok = false;      // k_min_inner >= -4 - slack
  // Slack on the -4 bound: two grid distance fields enter the selection,
  // each off by at most kGridSlack.
  double bound_slack = 0.0;
};

struct RenormalizeResult {
  WeierstrassData data;
  RenormalizeReport report;
};

// Restricts to the half-distance sub-disk around the domain center, picks
// the cell maximizing |K| d'^2 there, and rescales so |K| = 1 at that
// cell. The report verifies K stays within [-4 - slack, 0] on the
// half-disk around the chosen cell. Throws FlatSurfaceError when the
// curvature vanishes identically.
RenormalizeResult renormalize(const WeierstrassData& data, int grid_n);

struct SurfaceRow {
  std::string name;
  std::size_t q_omitted = 0;     // planes with sampled margin > threshold
  bool omission_ok = false;      // q_omitted == number of planes
  double sup_product = 0.0;
  Complex argmax_z{0.0, 0.0};
  double min_margin = 0.0;       // over all planes
  double kappa_used = kCurvatureNormalization;
};

struct ExperimentReport {
  std::vector<SurfaceRow> rows;
  double empirical_C = 0.0;      // max of sup_product over rows
  std::vector<int> resolutions;  // grid sizes used
  double stability = 0.0;        // relative change of empirical_C across them
  std::vector<std::string> warnings;
  ExperimentConfig config;       // echoed into the written report
};

// Requires the hyperplane set in general position (GeneralPositionError
// with witness otherwise) and every surface valid (ConfigError). Surfaces
// failing the omission threshold are flagged and still measured. The run
// is repeated at 2 grid_n - 1 to fill the stability field.
ExperimentReport run_experiment(const ExperimentConfig& config);

// Writes <path>.csv (one row per surface) and <path>.json (summary with
// the family maximum, configuration echo, and tool version). Floats carry
// 17 significant digits; output is byte-stable for identical input.
void emit_report(const ExperimentReport& report, const std::string& path);

}  // namespace minsurf
