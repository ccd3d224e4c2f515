// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "minsurf/catalog.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/weierstrass.hpp"

using namespace minsurf;

namespace {

const Complex kI(0.0, 1.0);

Rational rat(std::initializer_list<Complex> num) {
  return Rational(Polynomial(num), Polynomial::constant(Complex(1.0)));
}

WeierstrassData plane_data() { return builtin("plane").data; }
WeierstrassData enneper_data() { return builtin("enneper").data; }

// Conformal curvature K = -(lap log lambda)/lambda^2 from a 5-point
// stencil of the analytic conformal factor. Independent of the formal
// curvature path.
double stencil_curvature(const WeierstrassData& data, Complex z, double h) {
  auto logl = [&](Complex w) { return std::log(conformal_factor(data, w)); };
  const double lap =
      (logl(z + Complex(h)) + logl(z - Complex(h)) + logl(z + Complex(0.0, h)) +
       logl(z - Complex(0.0, h)) - 4.0 * logl(z)) /
      (h * h);
  const double l = conformal_factor(data, z);
  return -lap / (l * l);
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(plane_data()).valid());
  CHECK(validate(enneper_data()).valid());

  const WeierstrassData bad({rat({Complex(1.0)}), rat({Complex(1.0)}), Rational()},
                            DiskDomain{});
  const ValidationReport report = validate(bad);
  CHECK_FALSE(report.valid());
  CHECK_FALSE(report.isotropy_ok);
  CHECK(report.common_zeros.empty());
  CHECK(report.periods_vacuous);
}

TEST_CASE("validation flags poles and common zeros in the domain") {
  // 1/(z - 1/2) has a pole inside the unit disk.
  const Rational pole(Polynomial{Complex(1.0)}, Polynomial{Complex(-0.5), Complex(1.0)});
  const WeierstrassData with_pole({pole, kI * pole, Rational()}, DiskDomain{});
  const ValidationReport pr = validate(with_pole);
  CHECK(pr.isotropy_ok);
  REQUIRE(pr.poles.size() == 2);
  CHECK(std::abs(pr.poles[0].second - Complex(0.5)) < 1e-9);

  // All forms share the factor z.
  const WeierstrassData with_zero(
      {rat({Complex(0.0), Complex(1.0)}), rat({Complex(0.0), kI}), Rational()},
      DiskDomain{});
  const ValidationReport zr = validate(with_zero);
  CHECK(zr.isotropy_ok);
  REQUIRE(zr.common_zeros.size() == 1);
  CHECK(std::abs(zr.common_zeros[0]) < 1e-9);
}

TEST_CASE("construction rejects degenerate input") {
  CHECK_THROWS_AS(WeierstrassData({rat({Complex(1.0)}), rat({kI})}, DiskDomain{}),
                  std::invalid_argument);
}

TEST_CASE("immersion closed forms") {
  const WeierstrassData plane = plane_data();
  const Complex z(0.3, 0.4);
  const std::vector<double> x = immersion_point(plane, z);
  REQUIRE(x.size() == 3);
  CHECK(x[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(x[1] == doctest::Approx(-0.8).epsilon(1e-12));
  CHECK(std::abs(x[2]) < 1e-14);

  const std::vector<double> zero = immersion_point(plane, plane.domain().center);
  for (double c : zero) CHECK(c == 0.0);

  // Antiderivatives of ((1-z^2)/2, i(1+z^2)/2, z) at z = 1/2:
  // x_1 = 2 Re((z - z^3/3)/2) = 11/24, x_3 = 2 Re(z^2/2) = 1/4.
  const std::vector<double> e = immersion_point(enneper_data(), Complex(0.5));
  CHECK(std::abs(e[0] - 11.0 / 24.0) < 1e-10);
  CHECK(std::abs(e[1]) < 1e-10);
  CHECK(std::abs(e[2] - 0.25) < 1e-10);

  CHECK_THROWS_AS(immersion_point(plane, Complex(1.5)), DomainError);
}

TEST_CASE("quadrature order convergence") {
  const WeierstrassData voss = builtin("voss(2,-2,2i)").data;
  for (Complex z : {Complex(0.7, 0.2), Complex(-0.5, 0.6), Complex(0.1, -0.9)}) {
    const std::vector<double> lo = immersion_point(voss, z, 8);
    const std::vector<double> hi = immersion_point(voss, z, 16);
    for (std::size_t i = 0; i < lo.size(); ++i) CHECK(std::abs(lo[i] - hi[i]) < 1e-10);
  }
}

TEST_CASE("conformal factor") {
  CHECK(conformal_factor(plane_data(), Complex(0.2, -0.7)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(conformal_factor(enneper_data(), Complex(0.0)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(conformal_factor(enneper_data(), Complex(1.0)) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("gauss map") {
  const ProjPoint p = gauss_map(plane_data(), Complex(0.3, 0.1));
  REQUIRE(p.homog.size() == 3);
  CHECK(p.homog[0] == Complex(1.0));
  CHECK(p.homog[1] == kI);
  CHECK(p.homog[2] == Complex(0.0));

  // acos resolves zero distances only to sqrt(eps).
  const ProjPoint g0 = gauss_map(enneper_data(), Complex(0.0));
  CHECK(fubini_study_dist(g0, ProjPoint{{Complex(1.0), kI, Complex(0.0)}}) < 1e-7);

  const ProjPoint g1 = gauss_map(enneper_data(), Complex(1.0));
  CHECK(fubini_study_dist(g1, ProjPoint{{Complex(0.0), kI, Complex(1.0)}}) < 1e-7);
}

TEST_CASE("curvature matches the stencil oracle") {
  CHECK(curvature(plane_data(), Complex(0.4, 0.4)) == 0.0);

  const WeierstrassData enneper = enneper_data();
  const double k0 = curvature(enneper, Complex(0.0));
  CHECK(k0 < 0.0);
  CHECK(std::abs(k0 - stencil_curvature(enneper, Complex(0.0), 1e-3)) < 1e-5);
  // Analytic value under lambda = 1 + |z|^2.
  CHECK(k0 == doctest::Approx(-4.0).epsilon(1e-12));

  for (Complex z : {Complex(0.5, 0.1), Complex(-0.3, 0.6)}) {
    const double ka = curvature(enneper, z);
    const double kf = stencil_curvature(enneper, z, 1e-3);
    CHECK(std::abs(ka - kf) <= 1e-5 * std::abs(kf));
  }
}

TEST_CASE("curvature is nonpositive everywhere") {
  for (const char* name : {"enneper", "enneper_k(3)", "voss(2,-2,2i)", "iso4(0.7)"}) {
    const WeierstrassData data = builtin(name).data;
    const GridMetric metric = sample_metric(data, 33);
    for (int i = 0; i < metric.n; ++i)
      for (int j = 0; j < metric.n; ++j)
        if (metric.mask[metric.index(i, j)])
          CHECK(curvature(data, metric.cell_center(i, j)) <= 1e-12);
  }
}

TEST_CASE("grid curvature oracle") {
  const GridMetric flat = flat_metric(65, 3.0);
  CHECK(std::abs(grid_curvature(flat, 32, 32)) < 1e-10);

  // Stencil spacing 1e-3 around the origin of the hyperbolic disk.
  GridMetric tiny;
  tiny.domain = DiskDomain{Complex(0.0, 0.0), 4.5e-3};
  tiny.n = 9;
  tiny.mask = disk_mask(tiny.domain, tiny.n);
  tiny.lambda.assign(81, 0.0);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (tiny.mask[tiny.index(i, j)])
        tiny.lambda[tiny.index(i, j)] = 2.0 / (1.0 - std::norm(tiny.cell_center(i, j)));
  CHECK(std::abs(grid_curvature(tiny, 4, 4) + 1.0) < 1e-4);

  CHECK_THROWS_AS(grid_curvature(flat, 0, 32), BoundaryError);
}

TEST_CASE("formula and grid curvature agree on a surface grid") {
  const WeierstrassData enneper = enneper_data();
  const GridMetric metric = sample_metric(enneper, 65);
  double k_max = 0.0, worst = 0.0;
  for (int i = 0; i < metric.n; ++i)
    for (int j = 0; j < metric.n; ++j)
      if (curvature_stencil_fits(metric, i, j))
        k_max = std::max(k_max, std::abs(grid_curvature(metric, i, j)));
  for (int i = 0; i < metric.n; ++i)
    for (int j = 0; j < metric.n; ++j) {
      if (!curvature_stencil_fits(metric, i, j)) continue;
      const double kg = grid_curvature(metric, i, j);
      const double ka = curvature(enneper, metric.cell_center(i, j));
      worst = std::max(worst, std::abs(ka - kg) / k_max);
    }
  CHECK(worst < 1e-3);

  CHECK(curvature_normalization_fit(enneper, 65) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("scaling laws") {
  const WeierstrassData enneper = enneper_data();
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> mu_dist(0.1, 10.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double mu = mu_dist(rng);
    const WeierstrassData scaled = scale(enneper, mu);
    for (Complex z : {Complex(0.3, -0.2), Complex(-0.6, 0.1)}) {
      CHECK(conformal_factor(scaled, z) ==
            doctest::Approx(mu * conformal_factor(enneper, z)).epsilon(1e-10));
      CHECK(curvature(scaled, z) ==
            doctest::Approx(curvature(enneper, z) / (mu * mu)).epsilon(1e-10));
      const std::vector<double> x = immersion_point(enneper, z);
      const std::vector<double> xs = immersion_point(scaled, z);
      for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(xs[i] == doctest::Approx(mu * x[i]).epsilon(1e-10));
    }
  }

  const WeierstrassData identity = scale(enneper, 1.0);
  for (std::size_t i = 0; i < identity.m(); ++i) {
    CHECK(identity.forms()[i].num() == enneper.forms()[i].num());
    CHECK(identity.forms()[i].den() == enneper.forms()[i].den());
  }

  CHECK(conformal_factor(scale(plane_data(), 2.0), Complex(0.1)) ==
        doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("isotropy gives a conformal immersion") {
  // Finite-difference tangents of the integrated immersion must satisfy
  // |x_u| = |x_v| = lambda and x_u . x_v = 0.
  for (const char* name : {"enneper", "voss(2,-2,2i)", "iso4(0.7)"}) {
    const WeierstrassData data = builtin(name).data;
    const double h = 1e-4;
    for (Complex z : {Complex(0.2, 0.3), Complex(-0.4, -0.1), Complex(0.5, -0.5)}) {
      const std::vector<double> xe = immersion_point(data, z + Complex(h));
      const std::vector<double> xw = immersion_point(data, z - Complex(h));
      const std::vector<double> xn = immersion_point(data, z + Complex(0.0, h));
      const std::vector<double> xs = immersion_point(data, z - Complex(0.0, h));
      double uu = 0.0, vv = 0.0, uv = 0.0;
      for (std::size_t i = 0; i < data.m(); ++i) {
        const double xu = (xe[i] - xw[i]) / (2.0 * h);
        const double xv = (xn[i] - xs[i]) / (2.0 * h);
        uu += xu * xu;
        vv += xv * xv;
        uv += xu * xv;
      }
      const double lambda = conformal_factor(data, z);
      CHECK(std::abs(std::sqrt(uu) - lambda) < 1e-6 * lambda);
      CHECK(std::abs(std::sqrt(vv) - lambda) < 1e-6 * lambda);
      CHECK(std::abs(uv) < 1e-6 * lambda * lambda);
    }
  }
}

TEST_CASE("sample_metric matches pointwise evaluation") {
  const GridMetric metric = sample_metric(plane_data(), 33);
  for (int i = 0; i < metric.n; ++i)
    for (int j = 0; j < metric.n; ++j)
      if (metric.mask[metric.index(i, j)])
        CHECK(metric.lambda[metric.index(i, j)] == doctest::Approx(2.0).epsilon(1e-14));

  const GridMetric em = sample_metric(enneper_data(), 33);
  const std::size_t c = em.center_cell();
  CHECK(em.lambda[c] == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(sample_metric(plane_data(), 8), std::invalid_argument);
}
