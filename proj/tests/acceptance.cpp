// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minsurf/catalog.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/experiment.hpp"
#include "minsurf/io.hpp"
#include "minsurf/metricgeo.hpp"

using namespace minsurf;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::pair<int, int>> sample_cells(const GridMetric& metric, int count,
                                              double max_radius, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, metric.n - 1);
  std::vector<std::pair<int, int>> cells;
  while (static_cast<int>(cells.size()) < count) {
    const int i = pick(rng), j = pick(rng);
    if (!metric.masked(i, j)) continue;
    const double r = std::abs(metric.cell_center(i, j) - metric.domain.center) /
                     metric.domain.radius;
    if (r > max_radius || r < 0.05) continue;
    cells.emplace_back(i, j);
  }
  return cells;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. The curvature formula agrees with the conformal finite-difference
// route on the catalog grids, measured as sup deviation normalized by the
// field maximum (the formula has exact zeros where pointwise quotients
// are undefined).
void criterion_curvature_consistency() {
  bool ok = true;
  std::ostringstream detail;
  for (const char* name : {"enneper", "enneper_k(2)", "voss(2,-2,2i)", "iso4(0.7)"}) {
    const auto t0 = std::chrono::steady_clock::now();
    const WeierstrassData data = builtin(name).data;
    const GridMetric metric = sample_metric(data, 129);
    double k_max = 0.0, worst = 0.0;
    for (int i = 0; i < metric.n; ++i)
      for (int j = 0; j < metric.n; ++j)
        if (curvature_stencil_fits(metric, i, j))
          k_max = std::max(k_max, std::abs(grid_curvature(metric, i, j)));
    for (int i = 0; i < metric.n; ++i)
      for (int j = 0; j < metric.n; ++j) {
        if (!curvature_stencil_fits(metric, i, j)) continue;
        const double diff = std::abs(curvature(data, metric.cell_center(i, j)) -
                                     grid_curvature(metric, i, j));
        worst = std::max(worst, diff / k_max);
      }
    const double elapsed = seconds_since(t0);
    if (worst > 1e-3 || elapsed > 10.0) ok = false;
    detail << name << " dev " << fmt17(worst) << " in " << std::round(elapsed * 100) / 100
           << "s; ";
  }
  report(1, ok, "curvature formula vs finite-difference oracle within 1e-3 at n=129",
         detail.str());
}

// 2. The finite-difference route itself reproduces curvature -1 for the
// Poincare factor.
void criterion_hyperbolic_anchor() {
  const GridMetric hyp = hyperbolic_metric(257);
  double worst = 0.0;
  for (auto [i, j] : sample_cells(hyp, 100, 0.7, 201))
    worst = std::max(worst, std::abs(grid_curvature(hyp, i, j) + 1.0));
  report(2, worst <= 1e-3, "grid curvature of 2/(1-|z|^2) is -1 +- 1e-3 at 100 points",
         "worst |K+1| " + fmt17(worst));
}

// 3. Grid geodesics against closed forms, and the R <-> r inverse pair.
void criterion_closed_form_distances() {
  bool ok = true;
  std::ostringstream detail;

  const GridMetric flat = flat_metric(257, 1.0);
  const int c = (flat.n - 1) / 2;
  const DistanceField flat_rho = geodesic_distances(flat, c, c);
  double worst_flat = 0.0;
  for (auto [i, j] : sample_cells(flat, 50, 0.9, 301)) {
    const double exact = std::abs(flat.cell_center(i, j));
    worst_flat = std::max(worst_flat, std::abs(flat_rho.at(i, j) - exact) / exact);
  }
  detail << "flat dev " << fmt17(worst_flat);
  if (worst_flat > kGridSlack) ok = false;

  const GridMetric hyp = hyperbolic_metric(257);
  const DistanceField hyp_rho = geodesic_distances(hyp, c, c);
  double worst_hyp = 0.0;
  for (auto [i, j] : sample_cells(hyp, 50, 0.8, 303)) {
    const double exact = hyperbolic_rho(hyp.cell_center(i, j));
    worst_hyp = std::max(worst_hyp, std::abs(hyp_rho.at(i, j) - exact) / exact);
  }
  detail << ", hyperbolic dev " << fmt17(worst_hyp);
  if (worst_hyp > kGridSlack) ok = false;

  double worst_inv = 0.0;
  for (double R : {0.1, 0.5, 1.0, 2.0, 5.0})
    worst_inv = std::max(worst_inv,
                         std::abs(hyperbolic_rho(Complex(radius_from_R(R), 0.0)) - R) /
                             std::max(1.0, R));
  detail << ", inverse pair dev " << fmt17(worst_inv);
  if (worst_inv > 1e-12) ok = false;

  report(3, ok, "flat and hyperbolic geodesics match closed forms within 1.5% at n=257",
         detail.str());
}

// 4. Comparison inequality and superharmonicity on metrics meeting the
// hypotheses.
void criterion_comparison_lemma() {
  bool ok = true;
  std::ostringstream detail;
  const double R = 2.0;
  for (bool hyperbolic : {true, false}) {
    const GridMetric metric =
        hyperbolic ? hyperbolic_truncation(257, R) : flat_metric(257, R);
    try {
      const ComparisonResult cmp = comparison_check(metric, R);
      const int c = (metric.n - 1) / 2;
      const DistanceField rho = geodesic_distances(metric, c, c);
      const SuperharmonicityResult sh = superharmonicity_check(rho, metric);
      detail << (hyperbolic ? "hyperbolic" : "flat") << ": slack "
             << fmt17(cmp.min_slack_rel) << ", max lap " << fmt17(sh.max_laplacian)
             << "; ";
      if (cmp.min_slack_rel < -kGridSlack || sh.max_laplacian > 1e-2) ok = false;
    } catch (const Error& e) {
      ok = false;
      detail << e.what() << "; ";
    }
  }
  report(4, ok, "comparison slack >= -1.5% and superharmonicity <= 1e-2 at n=257",
         detail.str());
}

// 5. Truncated-disk lower bounds at R = 1..4.
void criterion_truncation_bounds() {
  bool ok = true;
  std::ostringstream detail;
  std::vector<GridMetric> metrics;
  std::vector<double> radii;
  for (int k = 1; k <= 4; ++k) {
    metrics.push_back(hyperbolic_truncation(257, k));
    radii.push_back(k);
  }
  const auto cells = sample_cells(metrics[0], 20, 0.9, 501);
  try {
    for (const TruncationCheck& check : lemma22_lower_bound(metrics, radii, cells)) {
      detail << "R=" << check.R << " margin " << fmt17(check.worst_margin) << "; ";
      if (!check.passed) ok = false;
    }
  } catch (const Error& e) {
    ok = false;
    detail << e.what();
  }
  report(5, ok, "truncated hyperbolic lower bound holds at 20 samples, R=1..4",
         detail.str());
}

// 6. Scale invariance of the sup product and the renormalization
// post-conditions.
void criterion_scaling_and_renormalization() {
  bool ok = true;
  std::ostringstream detail;

  for (const char* name : {"enneper", "voss(2,-2,2i)"}) {
    const WeierstrassData data = builtin(name).data;
    const double base = curvature_distance_product(data, 129).sup;
    double worst = 0.0;
    for (double mu : {0.5, 3.0}) {
      const double scaled = curvature_distance_product(scale(data, mu), 129).sup;
      worst = std::max(worst, std::abs(scaled - base) / base);
    }
    detail << name << ": scale dev " << fmt17(worst);
    if (worst > 1e-10) ok = false;

    const RenormalizeResult res = renormalize(data, 129);
    detail << ", |K(p')| dev " << fmt17(std::abs(std::abs(res.report.k_at_p_prime) - 1.0))
           << ", K in [" << fmt17(res.report.k_min_inner) << ", "
           << fmt17(res.report.k_max_inner) << "]; ";
    if (std::abs(std::abs(res.report.k_at_p_prime) - 1.0) > 1e-9) ok = false;
    if (!res.report.bound_ok) ok = false;
  }
  report(6, ok, "sup|K|^1/2 d scale-invariant to 1e-10; renormalize pins |K(p')|=1 "
                "with K in [-4-slack, 0]",
         detail.str());
}

// 7. The family experiment produces a finite, resolution-stable maximum.
void criterion_family_witness() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream detail;

  const CatalogEntry voss = builtin("voss(2,-2,2i)");
  ExperimentConfig config;
  for (double r : {0.3, 0.6, 0.9}) {
    DiskDomain d = voss.data.domain();
    d.radius = r;
    config.surfaces.push_back(
        {"voss(2,-2,2i)@r" + fmt17(r), WeierstrassData(voss.data.forms(), d)});
  }
  config.hyperplanes = voss.omitted;
  config.grid_n = 129;
  config.omission_threshold = 0.05;
  config.output = "acceptance_report";

  try {
    if (!general_position(config.hyperplanes).in_general_position)
      throw GeneralPositionError("omitted planes not in general position", {});
    const ExperimentReport rep = run_experiment(config);
    const double elapsed = seconds_since(t0);
    detail << "empirical_C " << fmt17(rep.empirical_C) << ", stability "
           << fmt17(rep.stability) << ", " << std::round(elapsed * 10) / 10 << "s";
    if (!(rep.empirical_C > 0.0) || !std::isfinite(rep.empirical_C)) ok = false;
    if (rep.stability > 0.05) ok = false;
    if (elapsed > 120.0) ok = false;
    for (const SurfaceRow& row : rep.rows)
      if (!row.omission_ok) ok = false;
  } catch (const Error& e) {
    ok = false;
    detail << e.what();
  }
  report(7, ok, "voss family over nested disks: finite empirical_C stable to 5% "
                "between n=129 and n=257",
         detail.str());
}

// 8. The SVD rank test against a brute-force determinant oracle over all
// minors.
bool oracle_general_position(const HyperplaneSet& set) {
  const std::size_t q = set.planes.size();
  const std::size_t k = std::min(q, set.m);
  std::vector<bool> row_select(q, false);
  std::fill(row_select.begin(), row_select.begin() + static_cast<long>(k), true);
  std::vector<std::size_t> rows(k), cols(k);

  auto det = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
    std::vector<std::vector<Complex>> a(k, std::vector<Complex>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = set.planes[r[i]].covector[c[j]];
    Complex d(1.0);
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      for (std::size_t i = col + 1; i < k; ++i)
        if (std::abs(a[i][col]) > std::abs(a[pivot][col])) pivot = i;
      if (std::abs(a[pivot][col]) == 0.0) return Complex(0.0);
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        d = -d;
      }
      d *= a[col][col];
      for (std::size_t i = col + 1; i < k; ++i) {
        const Complex f = a[i][col] / a[col][col];
        for (std::size_t j = col; j < k; ++j) a[i][j] -= f * a[col][j];
      }
    }
    return d;
  };

  do {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < q; ++i)
      if (row_select[i]) rows[idx++] = i;
    double scale = 0.0;
    for (std::size_t i : rows)
      for (Complex c : set.planes[i].covector) scale += std::norm(c);
    scale = std::pow(std::sqrt(scale / (static_cast<double>(k) * set.m)),
                     static_cast<double>(k));

    bool any = false;
    std::vector<bool> col_select(set.m, false);
    std::fill(col_select.begin(), col_select.begin() + static_cast<long>(k), true);
    do {
      std::size_t cidx = 0;
      for (std::size_t j = 0; j < set.m; ++j)
        if (col_select[j]) cols[cidx++] = j;
      if (std::abs(det(rows, cols)) > 1e-7 * scale) {
        any = true;
        break;
      }
    } while (std::prev_permutation(col_select.begin(), col_select.end()));
    if (!any) return false;
  } while (std::prev_permutation(row_select.begin(), row_select.end()));
  return true;
}

void criterion_general_position_oracle() {
  std::mt19937_64 rng(801);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> pick_m(3, 4);
  std::uniform_int_distribution<int> degen(0, 3);

  int disagreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    HyperplaneSet set;
    set.m = static_cast<std::size_t>(pick_m(rng));
    std::uniform_int_distribution<int> pick_q(1, 8);
    const int q = pick_q(rng);
    for (int i = 0; i < q; ++i) {
      Hyperplane h;
      for (std::size_t j = 0; j < set.m; ++j) h.covector.emplace_back(gauss(rng), gauss(rng));
      set.planes.push_back(std::move(h));
    }
    // A quarter of the trials get an exactly dependent plane.
    if (degen(rng) == 0 && q >= 3) {
      Hyperplane dep;
      dep.covector.assign(set.m, Complex(0.0));
      const Complex s1(gauss(rng), gauss(rng)), s2(gauss(rng), gauss(rng));
      for (std::size_t j = 0; j < set.m; ++j)
        dep.covector[j] = s1 * set.planes[0].covector[j] + s2 * set.planes[1].covector[j];
      set.planes[2] = dep;
    }
    if (general_position(set).in_general_position != oracle_general_position(set))
      ++disagreements;
  }
  report(8, disagreements == 0,
         "rank test matches brute-force determinant oracle on 200 arrangements",
         "disagreements " + std::to_string(disagreements));
}

// 9. Byte-identical reports for identical configurations.
void criterion_determinism() {
  ExperimentConfig config;
  config.surfaces.push_back({"plane", builtin("plane").data});
  config.surfaces.push_back({"enneper", builtin("enneper").data});
  const CatalogEntry voss = builtin("voss(2,-2,2i)");
  config.hyperplanes = voss.omitted;
  config.grid_n = 65;
  config.omission_threshold = 0.05;
  config.output = "acceptance_determinism";

  bool ok = true;
  std::string detail = "csv and json byte-identical";
  try {
    emit_report(run_experiment(config), "acceptance_determinism_a");
    emit_report(run_experiment(config), "acceptance_determinism_b");
    const std::string csv_a = slurp("acceptance_determinism_a.csv");
    const std::string csv_b = slurp("acceptance_determinism_b.csv");
    const std::string json_a = slurp("acceptance_determinism_a.json");
    const std::string json_b = slurp("acceptance_determinism_b.json");
    if (csv_a.empty() || csv_a != csv_b || json_a.empty() || json_a != json_b) {
      ok = false;
      detail = "outputs differ between runs";
    }
    for (const char* f :
         {"acceptance_determinism_a.csv", "acceptance_determinism_b.csv",
          "acceptance_determinism_a.json", "acceptance_determinism_b.json"})
      std::remove(f);
  } catch (const Error& e) {
    ok = false;
    detail = e.what();
  }
  report(9, ok, "repeated experiment runs emit identical bytes", detail);
}

}  // namespace

int main() {
  criterion_curvature_consistency();
  criterion_hyperbolic_anchor();
  criterion_closed_form_distances();
  criterion_comparison_lemma();
  criterion_truncation_bounds();
  criterion_scaling_and_renormalization();
  criterion_family_witness();
  criterion_general_position_oracle();
  criterion_determinism();
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
