// SPDX-License-Identifier: Apache-2.0
//
// Minimal surfaces in R^m built from m holomorphic forms f_i dz on a disk
// that satisfy sum f_i^2 = 0 and have no common zero. The immersion is
// x_i = 2 Re integral of f_i, the induced metric is ds = lambda |dz| with
// lambda^2 = 2 sum |f_i|^2, and the Gauss map is [f_1 : ... : f_m].

#pragma once

#include <string>
#include <vector>

#include "minsurf/grid.hpp"
#include "minsurf/holo.hpp"
#include "minsurf/projgeom.hpp"

namespace minsurf {

// Normalization of the curvature formula under the metric convention
// lambda^2 = 2 sum |f_i|^2. Pinned by the grid-curvature reconciliation
// run; see curvature_normalization_fit.
inline constexpr double kCurvatureNormalization = 1.0;

class WeierstrassData {
 public:
  // Requires m = forms.size() >= 3. Derivatives and the pairwise wedge
  // components f_j f_k' - f_k f_j' are precomputed; the data is immutable
  // afterwards.
  WeierstrassData(std::vector<Rational> forms, DiskDomain domain);

  std::size_t m() const { return forms_.size(); }
  const std::vector<Rational>& forms() const { return forms_; }
  const DiskDomain& domain() const { return domain_; }
  const std::vector<Rational>& derivatives() const { return derivatives_; }
  // Row-major upper triangle, (j, k) with j < k.
  const std::vector<Rational>& wedges() const { return wedges_; }

 private:
  std::vector<Rational> forms_;
  DiskDomain domain_;
  std::vector<Rational> derivatives_;
  std::vector<Rational> wedges_;
};

struct ValidationReport {
  bool isotropy_ok = false;
  // Zeros shared by all forms inside the closed domain.
  std::vector<Complex> common_zeros;
  // (form index, pole location) pairs inside the closed domain.
  std::vector<std::pair<std::size_t, Complex>> poles;
  // Disks are simply connected, so the period condition holds vacuously.
  bool periods_vacuous = true;

  bool valid() const { return isotropy_ok && common_zeros.empty() && poles.empty(); }
};

ValidationReport validate(const WeierstrassData& data);

// Immersion coordinates x(z), integrating each form along the straight
// segment from the domain center. Composite Gauss-Legendre with
// ceil(|z - center| / 0.1) panels of the given order. x(center) = 0.
// Throws DomainError when z is outside the closed domain.
std::vector<double> immersion_point(const WeierstrassData& data, Complex z,
                                    int quad_order = 12);

// lambda(z) = sqrt(2 sum |f_i(z)|^2).
double conformal_factor(const WeierstrassData& data, Complex z);

// Homogeneous coordinates (f_1(z), ..., f_m(z)).
ProjPoint gauss_map(const WeierstrassData& data, Complex z);

// Gauss curvature
//   K(z) = -kappa sum_{j<k} |f_j f_k' - f_k f_j'|^2 / (sum_j |f_j|^2)^3
// with formal derivatives; always <= 0.
double curvature(const WeierstrassData& data, Complex z);

// Conformal factor sampled on an n x n disk grid. Requires n >= 16.
GridMetric sample_metric(const WeierstrassData& data, int n);

// Forms multiplied by mu > 0; lengths scale by mu, K by mu^-2.
WeierstrassData scale(const WeierstrassData& data, double mu);

// Median ratio of grid_curvature over the analytic formula across interior
// cells, i.e. the empirical fit of kCurvatureNormalization. Cells where
// |K| is below 1e-6 of the grid maximum are skipped.
double curvature_normalization_fit(const WeierstrassData& data, int n);

}  // namespace minsurf
