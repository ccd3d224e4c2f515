// SPDX-License-Identifier: Apache-2.0

#include "minsurf/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minsurf/errors.hpp"
#include "minsurf/quadrature.hpp"

namespace minsurf {

namespace {

constexpr double kRootSlack = 1e-9;
constexpr double kPanelLength = 0.1;

void require_inside(const WeierstrassData& data, Complex z) {
  if (!data.domain().contains(z))
    throw DomainError("point outside the closed parameter domain");
}

}  // namespace

WeierstrassData::WeierstrassData(std::vector<Rational> forms, DiskDomain domain)
    : forms_(std::move(forms)), domain_(domain) {
  if (forms_.size() < 3)
    throw std::invalid_argument("Weierstrass data needs at least three forms");
  if (!(domain_.radius > 0.0))
    throw std::invalid_argument("domain radius must be positive");

  derivatives_.reserve(forms_.size());
  for (const Rational& f : forms_) derivatives_.push_back(f.derivative());

  wedges_.reserve(forms_.size() * (forms_.size() - 1) / 2);
  for (std::size_t j = 0; j < forms_.size(); ++j)
    for (std::size_t k = j + 1; k < forms_.size(); ++k)
      wedges_.push_back(forms_[j] * derivatives_[k] - forms_[k] * derivatives_[j]);
}

ValidationReport validate(const WeierstrassData& data) {
  ValidationReport report;

  Rational sum;
  for (const Rational& f : data.forms()) sum = sum + f * f;
  report.isotropy_ok = sum.is_zero();

  // Common zeros: roots of the gcd of all numerators that lie in the
  // closed disk. A zero form vanishes everywhere and drops out of the gcd.
  Polynomial g;
  for (const Rational& f : data.forms()) g = monic_gcd(g, f.num());
  if (g.degree() >= 1) {
    for (Complex root : polynomial_roots(g))
      if (data.domain().contains(root, kRootSlack)) report.common_zeros.push_back(root);
  }

  for (std::size_t i = 0; i < data.m(); ++i) {
    const Polynomial& den = data.forms()[i].den();
    if (den.degree() < 1) continue;
    for (Complex pole : polynomial_roots(den))
      if (data.domain().contains(pole, kRootSlack)) report.poles.emplace_back(i, pole);
  }

  return report;
}

std::vector<double> immersion_point(const WeierstrassData& data, Complex z,
                                    int quad_order) {
  require_inside(data, z);
  const Complex z0 = data.domain().center;
  const Complex delta = z - z0;
  std::vector<double> x(data.m(), 0.0);
  const double length = std::abs(delta);
  if (length == 0.0) return x;

  const int panels = static_cast<int>(std::ceil(length / kPanelLength));
  const GaussLegendreRule& rule = gauss_legendre(quad_order);

  for (std::size_t i = 0; i < data.m(); ++i) {
    Complex integral(0.0);
    for (int p = 0; p < panels; ++p) {
      const double t0 = static_cast<double>(p) / panels;
      const double t1 = static_cast<double>(p + 1) / panels;
      const double mid = 0.5 * (t0 + t1);
      const double half = 0.5 * (t1 - t0);
      Complex acc(0.0);
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double t = mid + half * rule.nodes[q];
        acc += rule.weights[q] * data.forms()[i].eval(z0 + t * delta);
      }
      integral += acc * half;
    }
    // d/dt of the parametrization contributes the constant factor delta.
    x[i] = 2.0 * (integral * delta).real();
  }
  return x;
}

double conformal_factor(const WeierstrassData& data, Complex z) {
  require_inside(data, z);
  double s = 0.0;
  for (const Rational& f : data.forms()) s += std::norm(f.eval(z));
  return std::sqrt(2.0 * s);
}

ProjPoint gauss_map(const WeierstrassData& data, Complex z) {
  require_inside(data, z);
  ProjPoint p;
  p.homog.reserve(data.m());
  for (const Rational& f : data.forms()) p.homog.push_back(f.eval(z));
  return p;
}

double curvature(const WeierstrassData& data, Complex z) {
  require_inside(data, z);
  double denom = 0.0;
  for (const Rational& f : data.forms()) denom += std::norm(f.eval(z));
  double numer = 0.0;
  for (const Rational& w : data.wedges()) numer += std::norm(w.eval(z));
  return -kCurvatureNormalization * numer / (denom * denom * denom);
}

GridMetric sample_metric(const WeierstrassData& data, int n) {
  if (n < 16) throw std::invalid_argument("metric grid resolution must be >= 16");
  GridMetric metric;
  metric.domain = data.domain();
  metric.n = n;
  metric.mask = disk_mask(metric.domain, n);
  metric.lambda.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = metric.index(i, j);
      if (!metric.mask[k]) continue;
      metric.lambda[k] = conformal_factor(data, metric.cell_center(i, j));
    }
  return metric;
}

WeierstrassData scale(const WeierstrassData& data, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("scale factor must be positive");
  std::vector<Rational> forms;
  forms.reserve(data.m());
  for (const Rational& f : data.forms()) forms.push_back(Complex(mu) * f);
  return WeierstrassData(std::move(forms), data.domain());
}

double curvature_normalization_fit(const WeierstrassData& data, int n) {
  const GridMetric metric = sample_metric(data, n);

  double k_max = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (curvature_stencil_fits(metric, i, j))
        k_max = std::max(k_max, std::abs(curvature(data, metric.cell_center(i, j))));
  if (k_max == 0.0) throw FlatSurfaceError("normalization fit on a flat surface");

  std::vector<double> ratios;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!curvature_stencil_fits(metric, i, j)) continue;
      const double ka = curvature(data, metric.cell_center(i, j));
      if (std::abs(ka) < 1e-6 * k_max) continue;
      ratios.push_back(grid_curvature(metric, i, j) / (ka / kCurvatureNormalization));
    }
  if (ratios.empty()) throw FlatSurfaceError("no usable cells for normalization fit");
  std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
  return ratios[ratios.size() / 2];
}

}  // namespace minsurf
