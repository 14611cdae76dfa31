#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "resumlab/precision.hpp"
#include "resumlab/rational.hpp"
#include "resumlab/real.hpp"

namespace resumlab {

/// Dense univariate polynomial with exact rational coefficients; index = power.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients);
  RatPoly(std::initializer_list<Rational> coefficients);

  static RatPoly monomial(Rational c, std::size_t power);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  RatPoly derivative() const;
  RatPoly monic() const;
  /// Scales by 1/|leading coefficient|; keeps the sign pattern.
  RatPoly abs_normalized() const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& rhs);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rational& b) { return a *= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws ZeroPolynomial when dividing by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

/// Monic greatest common divisor (zero only if both inputs are zero).
/// Runs a primitive pseudo-remainder sequence over the integers, so
/// coefficient size stays bounded.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Positive rational multiple of p with coprime integer coefficients.
RatPoly primitive_part(const RatPoly& p);

/// Primitive part of a positive multiple of the remainder of a by b.
/// The sign pattern of the true remainder is preserved.
RatPoly primitive_remainder(const RatPoly& a, const RatPoly& b);

/// Truncated power-series product and inverse (first `terms` coefficients).
std::vector<Rational> series_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      std::size_t terms);
std::vector<Rational> series_inverse(const std::vector<Rational>& a, std::size_t terms);

/// Horner evaluation at working precision `precision` (plus guard digits).
Real poly_eval(const RatPoly& p, const Real& x, Precision precision);
/// Exact evaluation at a rational point, rounded to `precision`.
Real poly_eval(const RatPoly& p, const Rational& x, Precision precision);
/// Horner evaluation with an explicit binary precision; no rounding of the input.
Real horner(const std::vector<Real>& coefficients, const Real& x);

}  // namespace resumlab
