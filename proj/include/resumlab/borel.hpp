#pragma once

#include <vector>

#include "resumlab/rational.hpp"
#include "resumlab/rs_series.hpp"
#include "resumlab/summation.hpp"

namespace resumlab {

/// Taylor coefficients E(n)/n! of the Borel transform.
struct BorelSeries {
  std::vector<Rational> coefficients;
};

BorelSeries borel_coefficients(const CoeffTable& table, int order);

/// |a_n / a_{n+1}|; tends to the radius of convergence 2/3.
Rational radius_diagnostic(const BorelSeries& bs, int n);

/// Diagonal Padé approximant B^[N,N] of the Borel transform.
PadeApproximant borel_pade(const CoeffTable& table, int N);

/// Laplace–Borel integral of B^[N,N]:
///   (1/λ) ∫_0^∞ B^[N,N](t) e^{-t/λ} dt = ∫_0^∞ B^[N,N](λu) e^{-u} du,
/// by exp-sinh quadrature. Throws ImproperApproximant when B^[N,N] has a pole
/// on (0, ∞) and PrecisionExhausted when quadrature levels do not agree.
SummationResult borel_pade_sum(const CoeffTable& table, int N, const Real& lam, Precision precision);

/// Laplace–Borel integral of an already built B^[N,N]; the caller guarantees
/// it was screened proper on (0, ∞).
SummationResult borel_pade_sum(const PadeApproximant& pa, const ScreeningReport& screening, const Real& lam,
                               Precision precision);

}  // namespace resumlab
