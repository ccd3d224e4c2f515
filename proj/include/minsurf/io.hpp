// SPDX-License-Identifier: Apache-2.0
//
// File formats. Polynomials serialize as JSON arrays of [re, im] pairs,
// lowest degree first; rationals as {"num": [...], "den": [...]}; surface
// data as {"m", "forms", "domain"}. Grid fields travel as CSV with a JSON
// header line. Report writers print every float with 17 significant
// digits so identical runs produce identical bytes.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "minsurf/experiment.hpp"
#include "minsurf/grid.hpp"
#include "minsurf/omission.hpp"
#include "minsurf/projgeom.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

// %.17g formatting used by every emitter.
std::string fmt17(double value);

std::string read_file(const std::string& path);

// JSON schema parsers. Throw ConfigError on malformed input, including
// polynomials above kMaxInputDegree and non-finite numbers.
WeierstrassData parse_weierstrass(const std::string& json_text);
HyperplaneSet parse_hyperplanes(const std::string& json_text);
ExperimentConfig parse_experiment_config(const std::string& json_text);

std::string weierstrass_to_json(const WeierstrassData& data);
std::string validation_to_json(const ValidationReport& report);

// Surface sample grid: header u,v,x_1..x_m,lambda,K; one row per masked
// cell in row-major order.
void write_surface_csv(const WeierstrassData& data, int n, int quad_order,
                       std::ostream& out);

// Distance field rows u,v,rho,rho_hyperbolic,slack. rho_hyperbolic is the
// hyperbolic distance at the cell's unit-parameter coordinate scaled by
// truncation_r (1 for the untruncated form); slack = rho - rho_hyperbolic.
void write_distance_csv(const GridMetric& metric, const DistanceField& field,
                        double truncation_r, std::ostream& out);

void write_omission_csv(const std::vector<PlaneMargin>& margins, std::ostream& out);

// Grid metric: one JSON header line {"domain": {...}, "n": n} followed by
// n rows of n comma-separated lambda values; masked-out cells are 0.
void write_metric_csv(const GridMetric& metric, std::ostream& out);
GridMetric read_metric_csv(std::istream& in);

void write_report_csv(const ExperimentReport& report, const std::string& path);
void write_report_json(const ExperimentReport& report, const std::string& path);

}  // namespace minsurf
