// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic for complex polynomials and rational functions of one
// variable. All derivatives downstream are formal, never finite
// differences. Coefficients are doubles; the arithmetic stays structured
// by cancelling common factors with an approximate monic Euclidean gcd
// and by snapping coefficient sums that cancel below relative roundoff
// scale to exact zero.

#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace minsurf {

using Complex = std::complex<double>;

// Largest polynomial degree accepted from user input (catalog parameters
// and JSON files). Internal intermediates may exceed it.
inline constexpr int kMaxInputDegree = 32;

// Relative scale below which rational evaluation reports a pole.
inline constexpr double kPoleTol = 1e-12;

// Zero test for remainders in the monic Euclidean gcd.
inline constexpr double kGcdZeroTol = 1e-10;

// A coefficient produced by additive cancellation is snapped to exact
// zero when it is below this fraction of the magnitudes that entered it.
inline constexpr double kCancelSnap = 1e-12;

// Coefficients lowest degree first. The zero polynomial has no
// coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Complex> coeffs);
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c);
  static Polynomial variable();  // z

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex leading() const;

  Complex eval(Complex z) const;  // Horner
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

struct PolyDivResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Long division; divisor must be nonzero.
PolyDivResult divmod(const Polynomial& a, const Polynomial& b);

// Monic Euclidean gcd. Remainders whose coefficients all fall below
// kGcdZeroTol (operands are kept monic, so coefficients are O(1) for
// well-scaled inputs) terminate the recursion. gcd(p, 0) = monic(p);
// gcd(0, 0) = 0.
Polynomial monic_gcd(const Polynomial& a, const Polynomial& b);

// All complex roots, via the companion matrix. Degree must be >= 1.
std::vector<Complex> polynomial_roots(const Polynomial& p);

// Quotient of two polynomials, kept reduced (numerator and denominator
// share no gcd factor) with a monic denominator. The zero rational is
// 0/1. Construction throws std::invalid_argument on a zero denominator.
class Rational {
 public:
  Rational();  // zero
  Rational(Polynomial num, Polynomial den);

  static Rational constant(Complex c);
  static Rational variable();  // z

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Throws PoleError when |den(z)| < kPoleTol * (1 + |num(z)|).
  Complex eval(Complex z) const;

  // (num' den - num den') / den^2, reduced.
  Rational derivative() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator*(Complex s, const Rational& r);

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace minsurf
