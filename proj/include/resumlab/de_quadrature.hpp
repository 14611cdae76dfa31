#pragma once

#include <cstddef>
#include <functional>

#include "resumlab/real.hpp"

namespace resumlab {

struct QuadratureOptions {
  mpfr_prec_t bits = 256;
  /// Stop once two successive levels agree to 10^(-agreement_digits), relative.
  int agreement_digits = 50;
  /// Step halvings after the initial unit step.
  int max_level = 12;
};

struct QuadratureResult {
  Real value;
  /// |I_k - I_{k-1}| between the last two levels. Heuristic, not a bound.
  Real error_estimate;
  int levels = 0;
  std::size_t evaluations = 0;
};

/// Integrand on (0, 1). Receives t and 1 - t (both accurate to full relative
/// precision, even when t is within 10^-1000 of an endpoint) plus the log of
/// the quadrature weight; returns the weighted integrand value.
using UnitIntegrand = std::function<Real(const Real& t, const Real& one_minus_t, const Real& log_weight)>;

/// Integrand on (0, ∞). Receives u and log u plus the log weight.
using HalfLineIntegrand = std::function<Real(const Real& u, const Real& log_u, const Real& log_weight)>;

/// tanh-sinh rule: t = (1 + tanh(π/2 sinh τ)) / 2 with trapezoidal steps in τ
/// halved level by level. Throws PrecisionExhausted if max_level is reached
/// without agreement.
QuadratureResult tanh_sinh(const UnitIntegrand& f, const QuadratureOptions& options);

/// exp-sinh rule: u = exp(π/2 sinh τ). Same stopping rule as tanh_sinh.
QuadratureResult exp_sinh(const HalfLineIntegrand& f, const QuadratureOptions& options);

}  // namespace resumlab
