#include <doctest.h>

#include "resumlab/de_quadrature.hpp"
#include "resumlab/errors.hpp"
#include "resumlab/precision.hpp"
#include "resumlab/rational.hpp"

using namespace resumlab;

TEST_CASE("tanh-sinh integrates smooth and endpoint-singular functions") {
  QuadratureOptions opt;
  opt.bits = bits_for_digits(60);
  opt.agreement_digits = 45;

  // ∫_0^1 t² dt = 1/3
  auto r = tanh_sinh([](const Real& t, const Real&, const Real& lw) { return t * t * exp(lw); }, opt);
  CHECK(relative_difference(r.value, Real(Rational(1, 3), opt.bits)) < decimal_epsilon(45, opt.bits));

  // ∫_0^1 dt/√(1-t) = 2, singular at t = 1; uses the accurate complement.
  r = tanh_sinh([](const Real&, const Real& c, const Real& lw) { return exp(lw - log(c) / 2); }, opt);
  CHECK(relative_difference(r.value, Real(2L, opt.bits)) < decimal_epsilon(45, opt.bits));

  // ∫_0^1 log(t) dt = -1
  r = tanh_sinh([](const Real& t, const Real&, const Real& lw) { return log(t) * exp(lw); }, opt);
  CHECK(relative_difference(r.value, Real(-1L, opt.bits)) < decimal_epsilon(45, opt.bits));
  CHECK(r.error_estimate < decimal_epsilon(40, opt.bits));
  CHECK(r.levels >= 2);
}

TEST_CASE("exp-sinh integrates over the half line") {
  QuadratureOptions opt;
  opt.bits = bits_for_digits(60);
  opt.agreement_digits = 45;

  // ∫_0^∞ e^{-u} du = 1
  auto r = exp_sinh([](const Real& u, const Real&, const Real& lw) { return exp(lw - u); }, opt);
  CHECK(relative_difference(r.value, Real(1L, opt.bits)) < decimal_epsilon(45, opt.bits));

  // ∫_0^∞ u³ e^{-u} du = 6
  r = exp_sinh([](const Real&, const Real& lu, const Real& lw) { return exp(lw + lu * 3 - exp(lu)); }, opt);
  CHECK(relative_difference(r.value, Real(6L, opt.bits)) < decimal_epsilon(45, opt.bits));

  // ∫_0^∞ du/(1+u)² = 1, algebraic decay
  r = exp_sinh([](const Real& u, const Real&, const Real& lw) { return exp(lw) / ((u + 1) * (u + 1)); }, opt);
  CHECK(relative_difference(r.value, Real(1L, opt.bits)) < decimal_epsilon(40, opt.bits));
}

TEST_CASE("non-convergence is reported") {
  QuadratureOptions opt;
  opt.bits = bits_for_digits(40);
  opt.agreement_digits = 30;
  opt.max_level = 3;
  // Oscillatory integrand the rule cannot resolve in three levels.
  CHECK_THROWS_AS(tanh_sinh(
                      [](const Real& t, const Real&, const Real& lw) {
                        Real s(t.bits());
                        const Real arg = t * 400;
                        mpfr_sin(s.get(), arg.get(), MPFR_RNDN);
                        return s * exp(lw);
                      },
                      opt),
                  PrecisionExhausted);
}
