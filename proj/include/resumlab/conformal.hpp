#pragma once

#include <vector>

#include "resumlab/rational.hpp"
#include "resumlab/rs_series.hpp"
#include "resumlab/summation.hpp"

namespace resumlab {

/// Fixed map parameter: the Borel transform's nearest singularity is at -1/s.
inline const Rational kMapParameter{3, 2};

/// Borel transform re-expanded in the conformal variable, W(z) = Σ c_k z^k.
struct ConformalSeries {
  Rational s = kMapParameter;
  std::vector<Rational> coefficients;
};

/// z = (√(1+sλ) − 1)/(√(1+sλ) + 1). Throws DomainError when 1 + sλ < 0.
Real map_z(const Real& lam, Precision precision);

/// λ = (4/s) z/(1−z)². Throws DomainError unless |z| < 1.
Real inverse_map(const Real& z, Precision precision);

/// c_0 = 1 and c_k = Σ_{n=1}^{k} (4/s)^n E(n) (k+n−1)! / (n! (2n−1)! (k−n)!).
ConformalSeries conformal_coefficients(const CoeffTable& table, int K);

/// F(λ,t) = (1+t)/(1−t)³ · exp(−4t/(λ s (1−t)²)) for 0 < t < 1, λ > 0.
Real kernel_F(const Real& lam, const Real& t, Precision precision);

/// log F(λ,t), taking 1 − t separately so t near 1 keeps full accuracy.
Real log_kernel_F(const Real& lam, const Real& t, const Real& one_minus_t);

/// Diagonal Padé approximant W^[N,N] of the conformal series.
PadeApproximant conformal_pade(const CoeffTable& table, int N);

/// (4/(λs)) ∫_0^1 W^[N,N](t) F(λ,t) dt by tanh-sinh quadrature. Throws
/// ImproperApproximant when W^[N,N] has a pole in (0, 1).
SummationResult cm_borel_sum(const CoeffTable& table, int N, const Real& lam, Precision precision);

/// Conformal Borel integral of an already built W^[N,N] screened proper on (0, 1).
SummationResult cm_borel_sum(const PadeApproximant& pa, const ScreeningReport& screening, const Real& lam,
                             Precision precision);

}  // namespace resumlab
