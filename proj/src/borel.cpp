#include "resumlab/borel.hpp"

#include <string>

#include "resumlab/de_quadrature.hpp"
#include "resumlab/errors.hpp"

namespace resumlab {

namespace {
constexpr int kGuardDigits = 20;
}

BorelSeries borel_coefficients(const CoeffTable& table, int order) {
  if (order < 0 || order > table.max_order()) {
    throw InvalidOrder("Borel series order " + std::to_string(order) + " exceeds table order " +
                       std::to_string(table.max_order()));
  }
  BorelSeries bs;
  bs.coefficients.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational a = table.energy(n) / Rational(factorial(static_cast<unsigned long>(n)));
    a.canonicalize();
    bs.coefficients.push_back(std::move(a));
  }
  return bs;
}

Rational radius_diagnostic(const BorelSeries& bs, int n) {
  if (n < 0 || static_cast<std::size_t>(n) + 1 >= bs.coefficients.size()) {
    throw InvalidOrder("radius diagnostic needs a_" + std::to_string(n + 1));
  }
  return abs(bs.coefficients[static_cast<std::size_t>(n)] / bs.coefficients[static_cast<std::size_t>(n) + 1]);
}

PadeApproximant borel_pade(const CoeffTable& table, int N) {
  if (N < 0 || 2 * N > table.max_order()) {
    throw InvalidOrder("B^[N,N] with N=" + std::to_string(N) + " needs coefficients through " +
                       std::to_string(2 * N));
  }
  return construct_pade(borel_coefficients(table, 2 * N).coefficients, N, N);
}

SummationResult borel_pade_sum(const CoeffTable& table, int N, const Real& lam, Precision precision) {
  if (!(lam > 0L)) throw DomainError("Borel–Padé sum requires λ > 0");
  const PadeApproximant pa = borel_pade(table, N);
  ScreeningReport report = screen(pa, Bound::finite(0), Bound::pos_inf());
  if (!report.proper) throw ImproperApproximant(N, std::string(method_name(Method::BOREL)));
  return borel_pade_sum(pa, report, lam, precision);
}

SummationResult borel_pade_sum(const PadeApproximant& pa, const ScreeningReport& screening, const Real& lam,
                               Precision precision) {
  if (!(lam > 0L)) throw DomainError("Borel–Padé sum requires λ > 0");
  if (!screening.proper) throw ImproperApproximant(pa.n, std::string(method_name(Method::BOREL)));

  QuadratureOptions options;
  options.bits = precision.bits(kGuardDigits);
  options.agreement_digits = precision.digits() - 10;

  const PadeEvaluator borel(pa, options.bits);
  const Real scale = lam.rounded(options.bits);
  const HalfLineIntegrand integrand = [&](const Real& u, const Real&, const Real& log_weight) {
    // B(λu) · e^{-u} · du/dτ with the exponential folded into the weight.
    return borel(scale * u) * exp(log_weight - u);
  };
  QuadratureResult q = exp_sinh(integrand, options);

  return SummationResult{lam,
                         Method::BOREL,
                         pa.n,
                         precision,
                         q.value.rounded(precision.bits()),
                         q.error_estimate.rounded(precision.bits()),
                         screening};
}

}  // namespace resumlab
