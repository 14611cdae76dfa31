#include "resumlab/conformal.hpp"

#include <string>

#include "resumlab/de_quadrature.hpp"
#include "resumlab/errors.hpp"

namespace resumlab {

namespace {
constexpr int kGuardDigits = 20;
}

Real map_z(const Real& lam, Precision precision) {
  const mpfr_prec_t bits = precision.bits(5);
  const Real s(kMapParameter, bits);
  const Real arg = s * lam.rounded(bits) + 1;
  if (arg < 0L) throw DomainError("conformal map needs 1 + sλ >= 0");
  const Real root = sqrt(arg);
  return ((root - 1) / (root + 1)).rounded(precision.bits());
}

Real inverse_map(const Real& z, Precision precision) {
  if (!(abs(z) < 1L)) throw DomainError("inverse conformal map needs |z| < 1");
  const mpfr_prec_t bits = precision.bits(5);
  const Real zw = z.rounded(bits);
  const Real one_minus = Real(1L, bits) - zw;
  const Real four_over_s(Rational(4) / kMapParameter, bits);
  return (four_over_s * zw / (one_minus * one_minus)).rounded(precision.bits());
}

ConformalSeries conformal_coefficients(const CoeffTable& table, int K) {
  if (K < 0 || K > table.max_order()) {
    throw InvalidOrder("conformal series order " + std::to_string(K) + " exceeds table order " +
                       std::to_string(table.max_order()));
  }
  ConformalSeries cs;
  cs.coefficients.reserve(static_cast<std::size_t>(K) + 1);
  cs.coefficients.emplace_back(1);
  const Rational four_over_s = Rational(4) / cs.s;
  for (int k = 1; k <= K; ++k) {
    Rational ck = 0;
    Rational power = 1;
    for (int n = 1; n <= k; ++n) {
      power *= four_over_s;
      const Integer num = factorial(static_cast<unsigned long>(k + n - 1));
      const Integer den = factorial(static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(2 * n - 1)) *
                          factorial(static_cast<unsigned long>(k - n));
      ck += power * table.energy(n) * Rational(num, den);
    }
    ck.canonicalize();
    cs.coefficients.push_back(std::move(ck));
  }
  return cs;
}

Real log_kernel_F(const Real& lam, const Real& t, const Real& one_minus_t) {
  const mpfr_prec_t bits = std::max(t.bits(), one_minus_t.bits());
  const Real s(kMapParameter, bits);
  const Real decay = t * 4 / (lam * s * one_minus_t * one_minus_t);
  return log(t + 1) - log(one_minus_t) * 3 - decay;
}

Real kernel_F(const Real& lam, const Real& t, Precision precision) {
  if (!(lam > 0L)) throw DomainError("kernel F requires λ > 0");
  if (!(t > 0L) || !(t < 1L)) throw DomainError("kernel F requires 0 < t < 1");
  const mpfr_prec_t bits = precision.bits(5);
  const Real tw = t.rounded(bits);
  const Real comp = Real(1L, bits) - tw;
  return exp(log_kernel_F(lam.rounded(bits), tw, comp)).rounded(precision.bits());
}

PadeApproximant conformal_pade(const CoeffTable& table, int N) {
  if (N < 0 || 2 * N > table.max_order()) {
    throw InvalidOrder("W^[N,N] with N=" + std::to_string(N) + " needs coefficients through " +
                       std::to_string(2 * N));
  }
  return construct_pade(conformal_coefficients(table, 2 * N).coefficients, N, N);
}

SummationResult cm_borel_sum(const CoeffTable& table, int N, const Real& lam, Precision precision) {
  if (!(lam > 0L)) throw DomainError("conformal Borel sum requires λ > 0");
  const PadeApproximant pa = conformal_pade(table, N);
  ScreeningReport report = screen(pa, Bound::finite(0), Bound::finite(1));
  if (!report.proper) throw ImproperApproximant(N, std::string(method_name(Method::BOREL_CM)));
  return cm_borel_sum(pa, report, lam, precision);
}

SummationResult cm_borel_sum(const PadeApproximant& pa, const ScreeningReport& screening, const Real& lam,
                             Precision precision) {
  if (!(lam > 0L)) throw DomainError("conformal Borel sum requires λ > 0");
  if (!screening.proper) throw ImproperApproximant(pa.n, std::string(method_name(Method::BOREL_CM)));

  QuadratureOptions options;
  options.bits = precision.bits(kGuardDigits);
  options.agreement_digits = precision.digits() - 10;

  const PadeEvaluator w(pa, options.bits);
  const Real lw = lam.rounded(options.bits);
  const UnitIntegrand integrand = [&](const Real& t, const Real& comp, const Real& log_weight) {
    return w(t) * exp(log_kernel_F(lw, t, comp) + log_weight);
  };
  QuadratureResult q = tanh_sinh(integrand, options);

  const Real prefactor = Real(4L, options.bits) / (lw * Real(kMapParameter, options.bits));
  return SummationResult{lam,
                         Method::BOREL_CM,
                         pa.n,
                         precision,
                         (prefactor * q.value).rounded(precision.bits()),
                         (prefactor * q.error_estimate).rounded(precision.bits()),
                         screening};
}

}  // namespace resumlab
