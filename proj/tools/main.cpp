// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success, 2 validation or
// configuration errors, 3 hypothesis errors (a check's preconditions are
// not met by the input).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minsurf/catalog.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/experiment.hpp"
#include "minsurf/io.hpp"
#include "minsurf/metricgeo.hpp"
#include "minsurf/version.hpp"

namespace {

using namespace minsurf;

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  return file;
}

int cmd_validate(const std::string& data_path) {
  const WeierstrassData data = parse_weierstrass(read_file(data_path));
  const ValidationReport report = validate(data);
  std::cout << validation_to_json(report);
  return report.valid() ? 0 : 2;
}

int cmd_sample(const std::string& data_path, int n, int quad_order,
               const std::string& out_path) {
  const WeierstrassData data = parse_weierstrass(read_file(data_path));
  const ValidationReport report = validate(data);
  if (!report.valid()) {
    std::cerr << "invalid surface data\n" << validation_to_json(report);
    return 2;
  }
  std::ofstream file;
  write_surface_csv(data, n, quad_order, open_or_stdout(out_path, file));
  return 0;
}

int cmd_geodesic(const std::string& data_path, int n, const std::string& from,
                 const std::string& out_path) {
  const WeierstrassData data = parse_weierstrass(read_file(data_path));
  const ValidationReport report = validate(data);
  if (!report.valid()) {
    std::cerr << "invalid surface data\n" << validation_to_json(report);
    return 2;
  }
  const std::size_t comma = from.find(',');
  if (comma == std::string::npos) throw ConfigError("--from expects u,v");
  const double u = std::stod(from.substr(0, comma));
  const double v = std::stod(from.substr(comma + 1));

  const GridMetric metric = sample_metric(data, n);
  const auto [i, j] = metric.nearest_cell(Complex(u, v));
  const DistanceField field = geodesic_distances(metric, i, j);
  std::ofstream file;
  write_distance_csv(metric, field, 1.0, open_or_stdout(out_path, file));
  return 0;
}

int cmd_omit(const std::string& data_path, const std::string& planes_path, int n,
             const std::string& out_path) {
  const WeierstrassData data = parse_weierstrass(read_file(data_path));
  const HyperplaneSet planes = parse_hyperplanes(read_file(planes_path));
  std::ofstream file;
  write_omission_csv(omission_margin(data, planes, n), open_or_stdout(out_path, file));
  return 0;
}

int cmd_renormalize(const std::string& data_path, int n) {
  const WeierstrassData data = parse_weierstrass(read_file(data_path));
  const RenormalizeResult result = renormalize(data, n);
  const RenormalizeReport& r = result.report;
  std::cout << "{\n"
            << "  \"mu\": " << fmt17(r.mu) << ",\n"
            << "  \"p_prime\": [" << fmt17(r.p_prime_z.real()) << ", "
            << fmt17(r.p_prime_z.imag()) << "],\n"
            << "  \"k_at_p_prime\": " << fmt17(r.k_at_p_prime) << ",\n"
            << "  \"inner_k_min\": " << fmt17(r.k_min_inner) << ",\n"
            << "  \"inner_k_max\": " << fmt17(r.k_max_inner) << ",\n"
            << "  \"inner_cells\": " << r.inner_cells << ",\n"
            << "  \"bound_slack\": " << fmt17(r.bound_slack) << ",\n"
            << "  \"bound_ok\": " << (r.bound_ok ? "true" : "false") << "\n"
            << "}\n";
  return 0;
}

int cmd_experiment(const std::string& config_path) {
  const ExperimentConfig config = parse_experiment_config(read_file(config_path));
  const ExperimentReport report = run_experiment(config);
  emit_report(report, config.output);
  std::cout << "empirical_C " << fmt17(report.empirical_C) << " (stability "
            << fmt17(report.stability) << "), report written to " << config.output
            << ".{csv,json}\n";
  for (const std::string& w : report.warnings) std::cout << "WARN " << w << '\n';
  return 0;
}

int cmd_catalog_list() {
  for (const auto& [name, blurb] : catalog_listing())
    std::cout << name << "  -  " << blurb << '\n';
  return 0;
}

int cmd_catalog_show(const std::string& name) {
  std::cout << weierstrass_to_json(builtin(name).data);
  return 0;
}

int cmd_metric(const std::string& data_path, const std::string& kind, double param,
               int n, const std::string& out_path) {
  GridMetric metric;
  if (!data_path.empty()) {
    const WeierstrassData data = parse_weierstrass(read_file(data_path));
    const ValidationReport report = validate(data);
    if (!report.valid()) {
      std::cerr << "invalid surface data\n" << validation_to_json(report);
      return 2;
    }
    metric = sample_metric(data, n);
  } else if (kind == "hyperbolic") {
    metric = hyperbolic_metric(n);
  } else if (kind == "truncation") {
    metric = hyperbolic_truncation(n, param);
  } else if (kind == "flat") {
    metric = flat_metric(n, param);
  } else {
    throw ConfigError("metric kind must be hyperbolic, truncation or flat");
  }
  std::ofstream file;
  write_metric_csv(metric, open_or_stdout(out_path, file));
  return 0;
}

int cmd_lemma21(const std::string& metric_path, double R, int collar) {
  std::ifstream in(metric_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + metric_path);
  const GridMetric metric = read_metric_csv(in);

  const ComparisonResult cmp = comparison_check(metric, R);
  const int n = metric.n;
  const std::size_t c = metric.center_cell();
  const DistanceField rho =
      geodesic_distances(metric, static_cast<int>(c) / n, static_cast<int>(c) % n);
  SuperharmonicityOptions opts;
  if (collar > 0) opts.collar_cells = collar;
  const SuperharmonicityResult sh = superharmonicity_check(rho, metric, opts);

  std::cout << "comparison: min slack " << fmt17(cmp.min_slack_rel)
            << " (relative), boundary distance " << fmt17(cmp.boundary_distance)
            << ", K in [" << fmt17(cmp.k_min) << ", " << fmt17(cmp.k_max) << "]"
            << (cmp.hypothesis_warn ? " [WARN: hypothesis within grid band]" : "")
            << '\n';
  std::cout << "superharmonicity: max scaled laplacian " << fmt17(sh.max_laplacian)
            << " over " << sh.tested_cells << " cells ("
            << sh.collar_cells_excluded << " collar cells excluded)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal surfaces from holomorphic data: curvature, Gauss maps, "
               "geodesic distance, and curvature-distance experiments"};
  app.set_version_flag("--version", std::string(minsurf::kToolName) + " " + minsurf::kVersion);
  app.require_subcommand(1);

  std::string data_path, planes_path, config_path, metric_path, out_path, from = "0,0", name;
  int n = 129;
  int quad_order = 12;
  int collar = 0;
  double R = 1.0;

  auto* validate_cmd = app.add_subcommand("validate", "check surface data invariants");
  validate_cmd->add_option("data", data_path)->required();

  auto* sample_cmd = app.add_subcommand("sample", "sample immersion, metric and curvature on a grid");
  sample_cmd->add_option("data", data_path)->required();
  sample_cmd->add_option("--n", n, "grid resolution");
  sample_cmd->add_option("--quad-order", quad_order, "quadrature order per panel");
  sample_cmd->add_option("--out", out_path, "output CSV (default stdout)");

  auto* geodesic_cmd = app.add_subcommand("geodesic", "geodesic distances from a point");
  geodesic_cmd->add_option("data", data_path)->required();
  geodesic_cmd->add_option("--n", n, "grid resolution");
  geodesic_cmd->add_option("--from", from, "source point u,v");
  geodesic_cmd->add_option("--out", out_path, "output CSV (default stdout)");

  auto* omit_cmd = app.add_subcommand("omit", "sampled omission margins against hyperplanes");
  omit_cmd->add_option("data", data_path)->required();
  omit_cmd->add_option("planes", planes_path)->required();
  omit_cmd->add_option("--n", n, "grid resolution");
  omit_cmd->add_option("--out", out_path, "output CSV (default stdout)");

  auto* renorm_cmd = app.add_subcommand("renormalize", "rescale so |K| = 1 at the picked cell");
  renorm_cmd->add_option("data", data_path)->required();
  renorm_cmd->add_option("--n", n, "grid resolution");

  auto* experiment_cmd = app.add_subcommand("experiment", "run a configured family experiment");
  experiment_cmd->add_option("config", config_path)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in surface data");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "emit an entry as JSON");
  show_cmd->add_option("name", name)->required();
  catalog_cmd->require_subcommand(1);

  std::string metric_kind = "hyperbolic";
  double metric_param = 1.0;
  auto* metric_cmd = app.add_subcommand("metric", "emit a conformal factor grid as CSV");
  metric_cmd->add_option("--data", data_path, "sample the metric of this surface data");
  metric_cmd->add_option("--kind", metric_kind, "hyperbolic | truncation | flat");
  metric_cmd->add_option("--param", metric_param, "radius R (truncation) or factor (flat)");
  metric_cmd->add_option("--n", n, "grid resolution");
  metric_cmd->add_option("--out", out_path, "output CSV (default stdout)");

  auto* lemma_cmd = app.add_subcommand("lemma21", "comparison and superharmonicity checks on a metric grid");
  lemma_cmd->add_option("--metric", metric_path)->required();
  lemma_cmd->add_option("--R", R, "hyperbolic radius of the represented disk")->required();
  lemma_cmd->add_option("--collar", collar, "override the source collar (cells)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) return cmd_validate(data_path);
    if (*sample_cmd) return cmd_sample(data_path, n, quad_order, out_path);
    if (*geodesic_cmd) return cmd_geodesic(data_path, n, from, out_path);
    if (*omit_cmd) return cmd_omit(data_path, planes_path, n, out_path);
    if (*renorm_cmd) return cmd_renormalize(data_path, n);
    if (*experiment_cmd) return cmd_experiment(config_path);
    if (*list_cmd) return cmd_catalog_list();
    if (*show_cmd) return cmd_catalog_show(name);
    if (*metric_cmd) return cmd_metric(data_path, metric_kind, metric_param, n, out_path);
    if (*lemma_cmd) return cmd_lemma21(metric_path, R, collar);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis error: " << e.what() << '\n';
    return 3;
  } catch (const FlatSurfaceError& e) {
    std::cerr << "hypothesis error: " << e.what() << '\n';
    return 3;
  } catch (const GeneralPositionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
