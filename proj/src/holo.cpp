// SPDX-License-Identifier: Apache-2.0

#include "minsurf/holo.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

double max_abs(const std::vector<Complex>& c) {
  double m = 0.0;
  for (const Complex& x : c) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : coeffs_(coeffs) {
  trim();
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(Complex c) { return Polynomial{c}; }

Polynomial Polynomial::variable() { return Polynomial{Complex(0.0), Complex(1.0)}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex Polynomial::leading() const {
  return coeffs_.empty() ? Complex(0.0) : coeffs_.back();
}

Complex Polynomial::eval(Complex z) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (Complex(1.0) / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex(0.0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    Complex av = k < a.coeffs_.size() ? a.coeffs_[k] : Complex(0.0);
    Complex bv = k < b.coeffs_.size() ? b.coeffs_[k] : Complex(0.0);
    Complex s = av + bv;
    // Cancellation far below the operand scale is roundoff debris.
    if (std::abs(s) < kCancelSnap * (std::abs(av) + std::abs(bv))) s = Complex(0.0);
    c[k] = s;
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (Complex(-1.0) * b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
  std::vector<double> mag(c.size(), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      Complex t = a.coeffs_[i] * b.coeffs_[j];
      c[i + j] += t;
      mag[i + j] += std::abs(t);
    }
  }
  for (std::size_t k = 0; k < c.size(); ++k)
    if (std::abs(c[k]) < kCancelSnap * mag[k]) c[k] = Complex(0.0);
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  std::vector<Complex> c(p.coeffs_);
  for (Complex& x : c) x *= s;
  return Polynomial(std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.coeffs_ == b.coeffs_;
}

// Quotient of a near-exact division, via least squares on the convolution
// system. Plain synthetic division amplifies gcd roundoff by |root|^degree
// when the divisor has roots outside the unit circle; the least-squares
// solve does not.
Polynomial exact_quotient(const Polynomial& p, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (p.is_zero() || p.degree() < g.degree()) return Polynomial();

  const Polynomial synthetic = divmod(p, g).quotient;

  const int qn = p.degree() - g.degree() + 1;
  const int rows = p.degree() + 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, qn);
  for (int c = 0; c < qn; ++c)
    for (int k = 0; k <= g.degree(); ++k)
      a(c + k, c) = g.coeffs()[static_cast<std::size_t>(k)];
  Eigen::VectorXcd rhs(rows);
  for (int k = 0; k < rows; ++k) rhs(k) = p.coeffs()[static_cast<std::size_t>(k)];
  const Eigen::VectorXcd q = a.colPivHouseholderQr().solve(rhs);
  std::vector<Complex> coeffs(static_cast<std::size_t>(qn));
  for (int k = 0; k < qn; ++k) coeffs[static_cast<std::size_t>(k)] = q(k);
  Polynomial least_squares(std::move(coeffs));

  // Keep the candidate reproducing p best; synthetic division is exact on
  // clean inputs but amplifies divisor roundoff by |root|^degree.
  auto residual = [&](const Polynomial& quot) {
    double m = 0.0;
    for (const Complex& c : (p - quot * g).coeffs()) m = std::max(m, std::abs(c));
    return m;
  };
  return residual(synthetic) <= residual(least_squares) ? synthetic : least_squares;
}

PolyDivResult divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};

  std::vector<Complex> rem(a.coeffs());
  const std::vector<Complex>& d = b.coeffs();
  const Complex lead = b.leading();
  const int dq = a.degree() - b.degree();
  std::vector<Complex> quot(static_cast<std::size_t>(dq) + 1, Complex(0.0));

  for (int k = dq; k >= 0; --k) {
    Complex q = rem[static_cast<std::size_t>(k) + d.size() - 1] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < d.size(); ++j)
      rem[static_cast<std::size_t>(k) + j] -= q * d[j];
  }
  rem.resize(d.size() - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    if (max_abs(r.coeffs()) <= kGcdZeroTol) return y;
    // Drop leading coefficients that are negligible relative to the
    // remainder scale before renormalizing, so the recursion stays stable.
    std::vector<Complex> rc(r.coeffs());
    const double scale = max_abs(rc);
    while (!rc.empty() && std::abs(rc.back()) < 1e-12 * scale) rc.pop_back();
    x = y;
    y = Polynomial(std::move(rc)).monic();
  }
  return x;
}

std::vector<Complex> polynomial_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("roots of a constant polynomial");
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const Complex lead = p.leading();
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -p.coeffs()[static_cast<std::size_t>(i)] / lead;
    if (i > 0) companion(i, i - 1) = Complex(1.0);
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

Rational::Rational() : num_(), den_(Polynomial::constant(Complex(1.0))) {}

Rational::Rational(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational with zero denominator");
  reduce();
}

Rational Rational::constant(Complex c) {
  return Rational(Polynomial::constant(c), Polynomial::constant(Complex(1.0)));
}

Rational Rational::variable() {
  return Rational(Polynomial::variable(), Polynomial::constant(Complex(1.0)));
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Complex(1.0));
    return;
  }
  Polynomial g = monic_gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  const Complex lead = den_.leading();
  num_ = (Complex(1.0) / lead) * num_;
  den_ = (Complex(1.0) / lead) * den_;
}

Complex Rational::eval(Complex z) const {
  const Complex n = num_.eval(z);
  const Complex d = den_.eval(z);
  if (std::abs(d) < kPoleTol * (1.0 + std::abs(n)))
    throw PoleError("rational function evaluated at a pole");
  return n / d;
}

Rational Rational::derivative() const {
  Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
  return Rational(std::move(n), den_ * den_);
}

namespace {

// Sum over the least common denominator. Cross-multiplying the full
// denominators would plant a shared factor that reduction then has to
// divide back out at a precision cost.
Rational add_impl(const Rational& a, const Rational& b, Complex sign) {
  const Polynomial g = monic_gcd(a.den(), b.den());
  if (g.degree() >= 1) {
    const Polynomial bq = exact_quotient(b.den(), g);
    const Polynomial aq = exact_quotient(a.den(), g);
    return Rational(a.num() * bq + sign * (b.num() * aq), a.den() * bq);
  }
  return Rational(a.num() * b.den() + sign * (b.num() * a.den()), a.den() * b.den());
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  return add_impl(a, b, Complex(1.0));
}

Rational operator-(const Rational& a, const Rational& b) {
  return add_impl(a, b, Complex(-1.0));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator*(Complex s, const Rational& r) {
  return Rational(s * r.num_, r.den_);
}

}  // namespace minsurf
