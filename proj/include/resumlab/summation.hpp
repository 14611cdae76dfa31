#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "resumlab/pade.hpp"
#include "resumlab/precision.hpp"
#include "resumlab/real.hpp"
#include "resumlab/rs_series.hpp"

namespace resumlab {

enum class Method { RS, PADE, BOREL, BOREL_CM };

/// "rs", "pade", "borel", "borel-cm".
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// A resummed energy with its provenance. Every result carries a proper
/// screening report; improper orders raise instead of producing a result.
struct SummationResult {
  Real lam;
  Method method = Method::RS;
  int order = 0;
  Precision precision;
  Real value;
  /// Absent for methods without quadrature.
  std::optional<Real> quadrature_error_estimate;
  ScreeningReport screening;
};

/// Approximant for (method, N) with its screening verdict. Independent of λ,
/// so one instance serves every evaluation point. RS carries no approximant.
struct PreparedApproximant {
  Method method = Method::RS;
  int order = 0;
  std::optional<PadeApproximant> approximant;
  ScreeningReport screening;
};

/// Builds and screens the approximant. Does not throw for improper orders;
/// check `screening.proper`.
PreparedApproximant prepare(Method method, const CoeffTable& table, int N);

/// Evaluates a prepared approximant at λ. Throws ImproperApproximant when the
/// screening found poles in the integration domain.
SummationResult summate(const PreparedApproximant& prepared, const CoeffTable& table, const Real& lam,
                        Precision precision);

/// Partial sum through order 2N (the [2N] row of the convergence tables).
SummationResult rs_sum(const CoeffTable& table, int N, const Real& lam, Precision precision);

/// Diagonal [N,N] Padé approximant of the RS series evaluated at λ.
SummationResult pade_sum(const CoeffTable& table, int N, const Real& lam, Precision precision);

/// Dispatches on `method`. λ = 0 returns exactly E(0) = 1 for every method.
SummationResult summate(Method method, const CoeffTable& table, int N, const Real& lam, Precision precision);

}  // namespace resumlab
