#include "resumlab/de_quadrature.hpp"

#include <string>

#include "resumlab/errors.hpp"

namespace resumlab {

namespace {

/// Evaluates the weighted integrand at abscissa τ of the transformed line.
using TauIntegrand = std::function<Real(const Real& tau)>;

constexpr int kScanStepsPerUnit = 8;
constexpr int kQuietSamples = 3;
constexpr long kMaxScanSteps = 8 * 12;

/// Finds the τ range outside which weighted terms are negligible, by walking
/// outward from τ = 0 in steps of 1/8 until several consecutive terms fall
/// below `cut` times the largest seen.
std::pair<long, long> scan_range(const TauIntegrand& g, mpfr_prec_t bits, int cut_digits, std::size_t& evals) {
  const Real cut = decimal_epsilon(cut_digits, bits);
  Real largest = abs(g(Real(0L, bits)));
  ++evals;

  auto walk = [&](int direction) {
    long step = 0;
    int quiet = 0;
    while (step < kMaxScanSteps) {
      ++step;
      Real tau(direction * step, bits);
      tau = tau / kScanStepsPerUnit;
      const Real term = abs(g(tau));
      ++evals;
      if (term > largest) largest = term;
      if (term <= cut * largest) {
        if (++quiet >= kQuietSamples) break;
      } else {
        quiet = 0;
      }
    }
    return step;
  };
  const long left = walk(-1);
  const long right = walk(+1);
  // Round outward to whole units so every level's grid fits the range.
  return {(left + kScanStepsPerUnit - 1) / kScanStepsPerUnit, (right + kScanStepsPerUnit - 1) / kScanStepsPerUnit};
}

QuadratureResult trapezoid_levels(const TauIntegrand& g, const QuadratureOptions& options) {
  const mpfr_prec_t bits = options.bits;
  QuadratureResult result{Real(bits), Real(bits), 0, 0};

  const auto [left_units, right_units] = scan_range(g, bits, options.agreement_digits + 15, result.evaluations);
  const Real tolerance = decimal_epsilon(options.agreement_digits, bits);

  // Level 0: unit step over integer abscissae.
  Real sum(bits);
  for (long j = -left_units; j <= right_units; ++j) {
    sum += g(Real(j, bits));
    ++result.evaluations;
  }
  Real previous = sum;

  for (int level = 1; level <= options.max_level; ++level) {
    const long denom = 1L << level;
    // New nodes are the odd multiples of 2^-level, added left to right.
    for (long j = -left_units * denom + 1; j < right_units * denom; j += 2) {
      Real tau(j, bits);
      tau = tau / denom;
      sum += g(tau);
      ++result.evaluations;
    }
    Real estimate = sum / denom;
    Real change = abs(estimate - previous);
    const bool agreed = estimate.is_zero() ? change.is_zero() : change <= tolerance * abs(estimate);
    result.levels = level;
    if (agreed && level >= 2) {
      result.value = std::move(estimate);
      result.error_estimate = std::move(change);
      return result;
    }
    previous = std::move(estimate);
  }
  throw PrecisionExhausted("double-exponential quadrature did not reach 10^-" +
                           std::to_string(options.agreement_digits) + " agreement after " +
                           std::to_string(options.max_level) + " levels");
}

}  // namespace

QuadratureResult tanh_sinh(const UnitIntegrand& f, const QuadratureOptions& options) {
  const mpfr_prec_t bits = options.bits;
  const Real half_pi = pi(bits) / 2;
  const Real log_pi = log(pi(bits));

  const TauIntegrand g = [&](const Real& tau) {
    const Real v = half_pi * sinh(tau);
    // t = 1/(1 + e^{-2v}), 1 - t = 1/(1 + e^{2v}), each computed without cancellation.
    const Real e_pos = exp(v * 2);
    const Real e_neg = exp(-v * 2);
    Real one(1L, bits);
    const Real t = one / (e_neg + 1);
    const Real comp = one / (e_pos + 1);
    if (t.is_zero() || comp.is_zero()) return Real(bits);
    // dt/dτ = π cosh τ · t · (1 - t)
    const Real log_weight = log_pi + log(cosh(tau)) + log(t) + log(comp);
    return f(t, comp, log_weight);
  };
  return trapezoid_levels(g, options);
}

QuadratureResult exp_sinh(const HalfLineIntegrand& f, const QuadratureOptions& options) {
  const mpfr_prec_t bits = options.bits;
  const Real half_pi = pi(bits) / 2;
  const Real log_half_pi = log(half_pi);

  const TauIntegrand g = [&](const Real& tau) {
    const Real log_u = half_pi * sinh(tau);
    const Real u = exp(log_u);
    if (u.is_zero() || !u.is_finite()) return Real(bits);
    // du/dτ = u · π/2 · cosh τ
    const Real log_weight = log_u + log_half_pi + log(cosh(tau));
    return f(u, log_u, log_weight);
  };
  return trapezoid_levels(g, options);
}

}  // namespace resumlab
