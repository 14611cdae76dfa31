#include "resumlab/summation.hpp"

#include "resumlab/borel.hpp"
#include "resumlab/conformal.hpp"
#include "resumlab/errors.hpp"

namespace resumlab {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::RS:
      return "rs";
    case Method::PADE:
      return "pade";
    case Method::BOREL:
      return "borel";
    case Method::BOREL_CM:
      return "borel-cm";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::RS, Method::PADE, Method::BOREL, Method::BOREL_CM}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

ScreeningReport polynomial_screening(int N) {
  return ScreeningReport{2 * N, 0, Bound::finite(0), Bound::pos_inf(), 0, true};
}

void check_order(const CoeffTable& table, int N) {
  if (N < 0 || 2 * N > table.max_order()) {
    throw InvalidOrder("order N=" + std::to_string(N) + " needs coefficients through " + std::to_string(2 * N) +
                       ", table has " + std::to_string(table.max_order()));
  }
}

}  // namespace

SummationResult rs_sum(const CoeffTable& table, int N, const Real& lam, Precision precision) {
  check_order(table, N);
  return SummationResult{lam,
                         Method::RS,
                         N,
                         precision,
                         partial_sum(table, 2 * N, lam, precision),
                         std::nullopt,
                         polynomial_screening(N)};
}

SummationResult pade_sum(const CoeffTable& table, int N, const Real& lam, Precision precision) {
  return summate(prepare(Method::PADE, table, N), table, lam, precision);
}

PreparedApproximant prepare(Method method, const CoeffTable& table, int N) {
  check_order(table, N);
  PreparedApproximant out{method, N, std::nullopt, polynomial_screening(N)};
  switch (method) {
    case Method::RS:
      return out;
    case Method::PADE:
      out.approximant = construct_pade(table.prefix(2 * N + 1), N, N);
      out.screening = screen(*out.approximant, Bound::finite(0), Bound::pos_inf());
      return out;
    case Method::BOREL:
      out.approximant = borel_pade(table, N);
      out.screening = screen(*out.approximant, Bound::finite(0), Bound::pos_inf());
      return out;
    case Method::BOREL_CM:
      out.approximant = conformal_pade(table, N);
      out.screening = screen(*out.approximant, Bound::finite(0), Bound::finite(1));
      return out;
  }
  throw InvalidArgument("unknown method");
}

SummationResult summate(const PreparedApproximant& prepared, const CoeffTable& table, const Real& lam,
                        Precision precision) {
  const int N = prepared.order;
  if (!prepared.screening.proper) throw ImproperApproximant(N, std::string(method_name(prepared.method)));
  if (lam < 0L) throw DomainError("resummation requires λ >= 0");
  if (lam.is_zero()) {
    // Every method reproduces E(0) = 1 in the λ → 0 limit.
    std::optional<Real> err;
    if (prepared.method == Method::BOREL || prepared.method == Method::BOREL_CM) err = Real(0L, precision.bits());
    return SummationResult{lam, prepared.method, N, precision, Real(1L, precision.bits()), std::move(err),
                           prepared.screening};
  }
  switch (prepared.method) {
    case Method::RS:
      return rs_sum(table, N, lam, precision);
    case Method::PADE:
      return SummationResult{lam,          Method::PADE, N, precision, evaluate(*prepared.approximant, lam, precision),
                             std::nullopt, prepared.screening};
    case Method::BOREL:
      return borel_pade_sum(*prepared.approximant, prepared.screening, lam, precision);
    case Method::BOREL_CM:
      return cm_borel_sum(*prepared.approximant, prepared.screening, lam, precision);
  }
  throw InvalidArgument("unknown method");
}

SummationResult summate(Method method, const CoeffTable& table, int N, const Real& lam, Precision precision) {
  return summate(prepare(method, table, N), table, lam, precision);
}

}  // namespace resumlab
