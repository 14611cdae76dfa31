#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace resumlab {

/// Multiprecision real number. Every value carries its own binary precision;
/// binary operations produce a result at the larger of the operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const mpq_class& value, mpfr_prec_t bits);
  Real(const std::string& decimal, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }
  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

  /// Same value rounded to a new precision.
  Real rounded(mpfr_prec_t bits) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent2() const noexcept { return mpfr_get_exp(value_); }

  /// Decimal rendering with `sig` significant digits, %g style with trailing
  /// zeros kept.
  std::string to_string(int sig) const;
  /// Scientific rendering d.ddd...e+XX with `sig` significant digits.
  std::string to_scientific(int sig) const;
  /// Fixed-point rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, long n);
Real pi(mpfr_prec_t bits);

/// |a - b| / |b|, or |a| when b is zero.
Real relative_difference(const Real& a, const Real& b);

/// 10^(-digits) at the given precision.
Real decimal_epsilon(int digits, mpfr_prec_t bits);

}  // namespace resumlab
