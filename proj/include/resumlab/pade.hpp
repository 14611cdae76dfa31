#pragma once

#include <vector>

#include "resumlab/precision.hpp"
#include "resumlab/rat_poly.hpp"
#include "resumlab/rational.hpp"
#include "resumlab/real.hpp"

namespace resumlab {

/// [m,n] Padé approximant P(x)/Q(x) with Q(0) = 1.
struct PadeApproximant {
  int m = 0;
  int n = 0;
  RatPoly numerator;
  RatPoly denominator;

  /// Exact Taylor coefficients of P/Q through x^(terms-1).
  std::vector<Rational> taylor(std::size_t terms) const;
};

/// How `screen` treats roots shared by numerator and denominator.
enum class CommonFactors {
  Cancel,  ///< divide out gcd(P, Q) first; only genuine poles count
  Keep,    ///< count every root of Q
};

struct ScreeningReport {
  int m = 0;
  int n = 0;
  Bound lo;
  Bound hi;
  int pole_count = 0;
  bool proper = true;
};

/// Solves the linear Padé conditions by fraction-free elimination.
/// Requires coeffs.size() >= m+n+1 and m >= n >= 0.
PadeApproximant construct_pade(const std::vector<Rational>& coeffs, int m, int n);

Real evaluate(const PadeApproximant& pa, const Real& x, Precision precision);

ScreeningReport screen(const PadeApproximant& pa, const Bound& lo, const Bound& hi,
                       CommonFactors policy = CommonFactors::Cancel);

/// Numerator and denominator coefficients converted once to a fixed binary
/// precision, for repeated evaluation inside quadrature loops.
class PadeEvaluator {
 public:
  PadeEvaluator(const PadeApproximant& pa, mpfr_prec_t bits);

  mpfr_prec_t bits() const noexcept { return bits_; }
  /// P(x)/Q(x); throws PoleHit when Q(x) cancels below the working precision.
  Real operator()(const Real& x) const;

 private:
  mpfr_prec_t bits_;
  std::vector<Real> num_;
  std::vector<Real> den_;
  std::vector<Real> den_abs_;
};

}  // namespace resumlab
