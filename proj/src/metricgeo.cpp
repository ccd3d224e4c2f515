// SPDX-License-Identifier: Apache-2.0

#include "minsurf/metricgeo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

struct Move {
  int di;
  int dj;
  double length;  // in cells
};

// King and knight steps plus the (3,1) and (3,2) families. Direction gaps
// stay below 18.435 degrees, which bounds the shortest-path overestimate
// by 1/cos(9.2175 deg) - 1 < 1.31%.
const std::array<Move, 32>& moves() {
  static const std::array<Move, 32> table = [] {
    std::array<Move, 32> t{};
    std::size_t k = 0;
    auto add = [&](int di, int dj) {
      t[k++] = Move{di, dj, std::sqrt(double(di * di + dj * dj))};
    };
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj)
        if (di != 0 || dj != 0) add(di, dj);
    const std::array<std::pair<int, int>, 8> knight = {{{1, 2}, {2, 1}, {-1, 2}, {-2, 1},
                                                        {1, -2}, {2, -1}, {-1, -2}, {-2, -1}}};
    for (auto [a, b] : knight) add(a, b);
    const std::array<std::pair<int, int>, 8> threes1 = {{{1, 3}, {3, 1}, {-1, 3}, {-3, 1},
                                                         {1, -3}, {3, -1}, {-1, -3}, {-3, -1}}};
    for (auto [a, b] : threes1) add(a, b);
    const std::array<std::pair<int, int>, 8> threes2 = {{{2, 3}, {3, 2}, {-2, 3}, {-3, 2},
                                                         {2, -3}, {3, -2}, {-2, -3}, {-3, -2}}};
    for (auto [a, b] : threes2) add(a, b);
    return t;
  }();
  return table;
}

DistanceField dijkstra(const GridMetric& metric, const std::vector<std::size_t>& seeds,
                       long source_tag) {
  const int n = metric.n;
  const double h = metric.spacing();
  DistanceField field;
  field.n = n;
  field.source = source_tag;
  field.dist.assign(metric.lambda.size(), std::numeric_limits<double>::infinity());
  field.reached.assign(metric.lambda.size(), 0);

  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (std::size_t s : seeds) {
    field.dist[s] = 0.0;
    heap.emplace(0.0, s);
  }

  while (!heap.empty()) {
    auto [d, k] = heap.top();
    heap.pop();
    if (field.reached[k]) continue;
    field.reached[k] = 1;
    const int i = static_cast<int>(k) / n;
    const int j = static_cast<int>(k) % n;
    const double lk = metric.lambda[k];
    for (const Move& mv : moves()) {
      const int ii = i + mv.di;
      const int jj = j + mv.dj;
      if (!metric.masked(ii, jj)) continue;
      const std::size_t kk = metric.index(ii, jj);
      if (field.reached[kk]) continue;
      const double w = mv.length * h * 0.5 * (lk + metric.lambda[kk]);
      const double nd = d + w;
      if (nd < field.dist[kk]) {
        field.dist[kk] = nd;
        heap.emplace(nd, kk);
      }
    }
  }
  return field;
}

}  // namespace

DistanceField geodesic_distances(const GridMetric& metric, int i, int j) {
  if (!metric.masked(i, j))
    throw UnreachableError("geodesic source lies outside the mask");
  const std::size_t s = metric.index(i, j);
  return dijkstra(metric, {s}, static_cast<long>(s));
}

std::vector<std::size_t> boundary_ring(const GridMetric& metric) {
  std::vector<std::size_t> ring;
  const int n = metric.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!metric.masked(i, j)) continue;
      bool edge = false;
      for (int di = -1; di <= 1 && !edge; ++di)
        for (int dj = -1; dj <= 1 && !edge; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (!metric.masked(i + di, j + dj)) edge = true;
        }
      if (edge) ring.push_back(metric.index(i, j));
    }
  return ring;
}

DistanceField boundary_distance_field(const GridMetric& metric) {
  std::vector<std::size_t> ring = boundary_ring(metric);
  if (ring.empty()) throw UnreachableError("metric has no boundary ring");
  return dijkstra(metric, ring, -1);
}

double dist_to_boundary(const GridMetric& metric, int i, int j) {
  if (!metric.masked(i, j))
    throw UnreachableError("boundary distance queried outside the mask");
  const DistanceField field = boundary_distance_field(metric);
  return field.at(i, j);
}

double hyperbolic_rho(Complex z) {
  const double r = std::abs(z);
  if (r >= 1.0) throw DomainError("hyperbolic distance requested outside the unit disk");
  return 2.0 * std::atanh(r);
}

double radius_from_R(double R) {
  if (R < 0.0) throw std::invalid_argument("hyperbolic radius must be nonnegative");
  // tanh saturates to 1.0 beyond R ~ 38; keep the value strictly below 1.
  return std::min(std::tanh(R / 2.0), std::nextafter(1.0, 0.0));
}

ComparisonResult comparison_check(const GridMetric& metric, double R,
                                  const ComparisonOptions& opts) {
  if (R <= 0.0) throw std::invalid_argument("hyperbolic radius must be positive");
  const double r = radius_from_R(R);
  const int n = metric.n;

  ComparisonResult result;
  result.k_min = std::numeric_limits<double>::infinity();
  result.k_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!curvature_stencil_fits(metric, i, j)) continue;
      const double k = grid_curvature(metric, i, j);
      result.k_min = std::min(result.k_min, k);
      result.k_max = std::max(result.k_max, k);
    }
  if (result.k_min < -1.0 - opts.curvature_tol || result.k_max > opts.curvature_tol)
    throw HypothesisError("curvature outside [-1, 0] beyond the discretization band");

  const std::size_t c = metric.center_cell();
  if (!metric.mask[c]) throw HypothesisError("domain center is masked out");
  const int ci = static_cast<int>(c) / n;
  const int cj = static_cast<int>(c) % n;

  const DistanceField bnd = boundary_distance_field(metric);
  result.boundary_distance = bnd.at(ci, cj);

  // The ring stair-steps up to about two cells inside the continuum
  // boundary, so that much metric length is invisible to the grid; allow
  // for it on top of the relative band.
  double ring_lambda = 0.0;
  for (std::size_t k : boundary_ring(metric)) ring_lambda = std::max(ring_lambda, metric.lambda[k]);
  const double band = opts.distance_tol * R + 2.0 * metric.spacing() * ring_lambda;
  const double margin = result.boundary_distance - R;
  if (margin <= -band)
    throw HypothesisError("center-to-boundary distance falls short of R beyond the grid band");
  result.hypothesis_warn = std::abs(margin) < band;

  const DistanceField rho = geodesic_distances(metric, ci, cj);
  result.min_slack_rel = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = metric.index(i, j);
      if (!metric.mask[k] || k == c) continue;
      const double zr = std::abs(metric.cell_center(i, j) - metric.domain.center) /
                        metric.domain.radius;
      if (zr >= 1.0) continue;
      const double bound = std::log((1.0 + r * zr) / (1.0 - r * zr));
      if (bound <= 0.0) continue;
      const double slack = (rho.at(i, j) - bound) / bound;
      if (slack < result.min_slack_rel) {
        result.min_slack_rel = slack;
        result.min_slack_abs = rho.at(i, j) - bound;
        result.argmin_cell = k;
      }
    }
  return result;
}

SuperharmonicityResult superharmonicity_check(const DistanceField& rho,
                                              const GridMetric& metric,
                                              const SuperharmonicityOptions& opts) {
  if (rho.source < 0)
    throw std::invalid_argument("superharmonicity check needs a single-source field");
  const int n = metric.n;
  const int si = static_cast<int>(rho.source) / n;
  const int sj = static_cast<int>(rho.source) % n;

  auto f = [](double t) { return std::log((std::exp(t) - 1.0) / (std::exp(t) + 1.0)); };

  SuperharmonicityResult result;
  result.max_laplacian = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!metric.masked(i, j)) continue;
      if (std::max(std::abs(i - si), std::abs(j - sj)) <= opts.collar_cells) {
        ++result.collar_cells_excluded;
        continue;
      }
      if (!metric.masked(i + 1, j) || !metric.masked(i - 1, j) ||
          !metric.masked(i, j + 1) || !metric.masked(i, j - 1))
        continue;
      // h^2-scaled flat Laplacian; the kink noise of graph distances is
      // then resolution-independent.
      const double lap = f(rho.at(i + 1, j)) + f(rho.at(i - 1, j)) +
                         f(rho.at(i, j + 1)) + f(rho.at(i, j - 1)) -
                         4.0 * f(rho.at(i, j));
      ++result.tested_cells;
      if (lap > result.max_laplacian) {
        result.max_laplacian = lap;
        result.argmax_cell = metric.index(i, j);
      }
    }
  if (result.tested_cells == 0)
    throw std::invalid_argument("no cells left outside the source collar");
  return result;
}

std::vector<TruncationCheck> lemma22_lower_bound(
    const std::vector<GridMetric>& metrics, const std::vector<double>& radii,
    const std::vector<std::pair<int, int>>& sample_cells,
    const ComparisonOptions& opts) {
  if (metrics.size() != radii.size())
    throw std::invalid_argument("one hyperbolic radius per metric is required");

  std::vector<TruncationCheck> out;
  out.reserve(metrics.size());
  for (std::size_t k = 0; k < metrics.size(); ++k) {
    const GridMetric& metric = metrics[k];
    const double R = radii[k];
    const double r = radius_from_R(R);

    ComparisonResult gate = comparison_check(metric, R, opts);

    TruncationCheck check;
    check.R = R;
    check.hypothesis_warn = gate.hypothesis_warn;
    check.worst_margin = std::numeric_limits<double>::infinity();
    check.passed = true;

    const int n = metric.n;
    const std::size_t c = metric.center_cell();
    const DistanceField rho =
        geodesic_distances(metric, static_cast<int>(c) / n, static_cast<int>(c) % n);

    for (auto [i, j] : sample_cells) {
      if (!metric.masked(i, j)) throw UnreachableError("sample cell outside the mask");
      const double zr = std::abs(metric.cell_center(i, j) - metric.domain.center) /
                        metric.domain.radius;
      const double bound = std::log((1.0 + r * zr) / (1.0 - r * zr));
      const double margin = rho.at(i, j) - (1.0 - kGridSlack) * bound;
      check.worst_margin = std::min(check.worst_margin, margin);
      if (margin < 0.0) check.passed = false;
    }
    out.push_back(check);
  }
  return out;
}

}  // namespace minsurf
