// SPDX-License-Identifier: Apache-2.0

#include "minsurf/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "minsurf/errors.hpp"
#include "minsurf/io.hpp"

namespace minsurf {

namespace {

constexpr double kFlatThreshold = 1e-12;

struct CurvatureGrid {
  std::vector<double> k;  // 0 outside the mask
};

CurvatureGrid curvature_grid(const WeierstrassData& data, const GridMetric& metric) {
  CurvatureGrid grid;
  grid.k.assign(metric.lambda.size(), 0.0);
  for (int i = 0; i < metric.n; ++i)
    for (int j = 0; j < metric.n; ++j) {
      const std::size_t idx = metric.index(i, j);
      if (!metric.mask[idx]) continue;
      grid.k[idx] = curvature(data, metric.cell_center(i, j));
    }
  return grid;
}

}  // namespace

SupProduct curvature_distance_product(const WeierstrassData& data, int grid_n) {
  const GridMetric metric = sample_metric(data, grid_n);
  const CurvatureGrid kgrid = curvature_grid(data, metric);
  const DistanceField bnd = boundary_distance_field(metric);

  SupProduct best;
  best.sup = -1.0;
  for (int i = 0; i < grid_n; ++i)
    for (int j = 0; j < grid_n; ++j) {
      const std::size_t idx = metric.index(i, j);
      if (!metric.mask[idx]) continue;
      const double value = std::sqrt(std::abs(kgrid.k[idx])) * bnd.at(i, j);
      if (value > best.sup) {
        best.sup = value;
        best.argmax_cell = idx;
        best.argmax_z = metric.cell_center(i, j);
      }
    }
  if (best.sup < 0.0) best.sup = 0.0;
  return best;
}

RenormalizeResult renormalize(const WeierstrassData& data, int grid_n) {
  const GridMetric metric = sample_metric(data, grid_n);
  const CurvatureGrid kgrid = curvature_grid(data, metric);

  double k_abs_max = 0.0;
  for (double k : kgrid.k) k_abs_max = std::max(k_abs_max, std::abs(k));
  if (k_abs_max < kFlatThreshold)
    throw FlatSurfaceError("renormalization is undefined on a flat surface");

  const int n = grid_n;
  const std::size_t c = metric.center_cell();
  if (!metric.mask[c]) throw DomainError("domain center is masked out");
  const int ci = static_cast<int>(c) / n;
  const int cj = static_cast<int>(c) % n;

  const DistanceField bnd = boundary_distance_field(metric);
  const double d_center = bnd.at(ci, cj);
  const DistanceField from_center = geodesic_distances(metric, ci, cj);

  // Inner half-distance sub-disk around the center.
  GridMetric restricted = metric;
  for (std::size_t k = 0; k < restricted.mask.size(); ++k) {
    if (!restricted.mask[k]) continue;
    if (!from_center.reached[k] || from_center.dist[k] > 0.5 * d_center) {
      restricted.mask[k] = 0;
      restricted.lambda[k] = 0.0;
    }
  }

  const DistanceField inner_bnd = boundary_distance_field(restricted);

  // Cell maximizing |K| d'^2; row-major order breaks ties.
  double best = -1.0;
  std::size_t p_prime = 0;
  for (std::size_t k = 0; k < restricted.mask.size(); ++k) {
    if (!restricted.mask[k] || !inner_bnd.reached[k]) continue;
    const double value = std::abs(kgrid.k[k]) * inner_bnd.dist[k] * inner_bnd.dist[k];
    if (value > best) {
      best = value;
      p_prime = k;
    }
  }
  if (best <= 0.0)
    throw FlatSurfaceError("curvature vanishes on the inner sub-disk");

  const double k_p = std::abs(kgrid.k[p_prime]);
  const double mu = std::sqrt(k_p);

  RenormalizeResult result{scale(data, mu), {}};
  RenormalizeReport& report = result.report;
  report.mu = mu;
  report.p_prime = p_prime;
  report.p_prime_z =
      metric.cell_center(static_cast<int>(p_prime) / n, static_cast<int>(p_prime) % n);
  report.k_at_p_prime = kgrid.k[p_prime] / (mu * mu);

  // Half-disk around p' inside the restricted domain, measured with the
  // unscaled metric (the cut is scale-invariant).
  const DistanceField from_p = geodesic_distances(
      restricted, static_cast<int>(p_prime) / n, static_cast<int>(p_prime) % n);
  const double cut = 0.5 * inner_bnd.dist[p_prime];

  report.k_min_inner = 0.0;
  report.k_max_inner = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < restricted.mask.size(); ++k) {
    if (!restricted.mask[k] || !from_p.reached[k]) continue;
    if (from_p.dist[k] >= cut) continue;
    const double k_scaled = kgrid.k[k] / (mu * mu);
    report.k_min_inner = std::min(report.k_min_inner, k_scaled);
    report.k_max_inner = std::max(report.k_max_inner, k_scaled);
    ++report.inner_cells;
  }
  // |K| <= 4 on the half-disk comes from ratios of two grid distance
  // fields, each within kGridSlack of the continuum.
  const double inflation = (1.0 + 2.0 * kGridSlack) * (1.0 + 2.0 * kGridSlack);
  report.bound_slack = 4.0 * (inflation - 1.0);
  report.bound_ok = report.k_min_inner >= -4.0 - report.bound_slack &&
                    report.k_max_inner <= kFlatThreshold;
  return result;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.grid_n < 64) throw ConfigError("grid_n must be at least 64");
  if (!(config.omission_threshold > 0.0 && config.omission_threshold < 1.0))
    throw ConfigError("omission_threshold must lie in (0, 1)");
  if (config.hyperplanes.planes.empty())
    throw ConfigError("experiment needs at least one hyperplane");

  GeneralPositionResult gp = general_position(config.hyperplanes);
  if (!gp.in_general_position) {
    std::ostringstream msg;
    msg << "hyperplanes not in general position; witness {";
    for (std::size_t i = 0; i < gp.witness.size(); ++i)
      msg << (i ? "," : "") << gp.witness[i];
    msg << "}";
    throw GeneralPositionError(msg.str(), gp.witness);
  }

  ExperimentReport report;
  report.config = config;
  report.resolutions = {config.grid_n, 2 * config.grid_n - 1};

  const std::size_t q = config.hyperplanes.planes.size();
  for (const NamedSurface& surface : config.surfaces) {
    const ValidationReport vr = validate(surface.data);
    if (!vr.valid())
      throw ConfigError("surface '" + surface.name + "' fails validation");
    const std::size_t m = surface.data.m();
    if (q <= m * (m + 1) / 2) {
      std::ostringstream warn;
      warn << "surface '" << surface.name << "': only " << q
           << " hyperplanes for m=" << m
           << "; the inequality's hypothesis needs more than " << m * (m + 1) / 2;
      report.warnings.push_back(warn.str());
    }
  }

  double c_primary = 0.0;
  for (const NamedSurface& surface : config.surfaces) {
    SurfaceRow row;
    row.name = surface.name;

    if (config.hyperplanes.m == surface.data.m()) {
      const std::vector<PlaneMargin> margins =
          omission_margin(surface.data, config.hyperplanes, config.grid_n);
      row.min_margin = 2.0;
      for (const PlaneMargin& pm : margins) {
        if (pm.min_margin > config.omission_threshold) ++row.q_omitted;
        row.min_margin = std::min(row.min_margin, pm.min_margin);
      }
      row.omission_ok = row.q_omitted == q;
    } else {
      std::ostringstream warn;
      warn << "surface '" << surface.name << "': ambient dimension "
           << surface.data.m() << " does not match the hyperplane set (m="
           << config.hyperplanes.m << "); omission margins skipped";
      report.warnings.push_back(warn.str());
      row.min_margin = 0.0;
      row.omission_ok = false;
    }

    const SupProduct sp = curvature_distance_product(surface.data, config.grid_n);
    row.sup_product = sp.sup;
    row.argmax_z = sp.argmax_z;
    report.rows.push_back(row);
    c_primary = std::max(c_primary, sp.sup);
  }
  report.empirical_C = c_primary;

  double c_fine = 0.0;
  for (const NamedSurface& surface : config.surfaces)
    c_fine = std::max(c_fine,
                      curvature_distance_product(surface.data, report.resolutions[1]).sup);
  report.stability =
      c_primary > 0.0 ? std::abs(c_fine - c_primary) / c_primary : 0.0;
  return report;
}

void emit_report(const ExperimentReport& report, const std::string& path) {
  write_report_csv(report, path + ".csv");
  write_report_json(report, path + ".json");
}

}  // namespace minsurf
