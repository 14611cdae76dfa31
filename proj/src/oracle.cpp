#include "resumlab/oracle.hpp"

#include <cstdlib>
#include <string>

#include "resumlab/errors.hpp"

namespace resumlab {

namespace {

constexpr int kGuardDigits = 10;
constexpr int kStabilityStep = 8;

void require_size(int size) {
  if (size < 4) throw InvalidArgument("oracle basis needs at least 4 even states, got " + std::to_string(size));
}

BandMatrix zero_band(int size, mpfr_prec_t bits) {
  BandMatrix m;
  for (int d = 0; d < 3; ++d) m.band[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(size), Real(bits));
  return m;
}

}  // namespace

Real BandMatrix::at(int i, int j) const {
  const int d = std::abs(i - j);
  const int row = std::min(i, j);
  if (d > 2) return Real(band[0].empty() ? 64 : band[0][0].bits());
  return band[static_cast<std::size_t>(d)][static_cast<std::size_t>(row)];
}

BandMatrix even_x2_matrix(int size, mpfr_prec_t bits) {
  BandMatrix m = zero_band(size, bits);
  for (int i = 0; i < size; ++i) {
    const long n = 2L * i;
    m.band[0][static_cast<std::size_t>(i)] = Real(2 * n + 1, bits) / 2;
    if (i + 1 < size) m.band[1][static_cast<std::size_t>(i)] = sqrt(Real((n + 1) * (n + 2), bits)) / 2;
  }
  return m;
}

BandMatrix even_x4_matrix(int size, mpfr_prec_t bits) {
  require_size(size);
  const int big = size + 4;
  const BandMatrix x2 = even_x2_matrix(big, bits);
  BandMatrix m = zero_band(size, bits);
  for (int i = 0; i < size; ++i) {
    for (int d = 0; d <= 2 && i + d < size; ++d) {
      const int j = i + d;
      Real acc(bits);
      for (int k = std::max(0, j - 1); k <= std::min(big - 1, i + 1); ++k) acc += x2.at(i, k) * x2.at(k, j);
      m.band[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = std::move(acc);
    }
  }
  return m;
}

BandMatrix even_x4_closed_form(int size, mpfr_prec_t bits) {
  BandMatrix m = zero_band(size, bits);
  for (int i = 0; i < size; ++i) {
    const long n = 2L * i;
    m.band[0][static_cast<std::size_t>(i)] = Real(6 * n * n + 6 * n + 3, bits) / 4;
    if (i + 1 < size) {
      m.band[1][static_cast<std::size_t>(i)] = Real(2 * n + 3, bits) * sqrt(Real((n + 1) * (n + 2), bits)) / 2;
    }
    if (i + 2 < size) {
      m.band[2][static_cast<std::size_t>(i)] = sqrt(Real((n + 1) * (n + 2), bits) * Real((n + 3) * (n + 4), bits)) / 4;
    }
  }
  return m;
}

BandMatrix hamiltonian_matrix(const Real& lam, int size, mpfr_prec_t bits) {
  BandMatrix h = even_x4_matrix(size, bits);
  const Real l = lam.rounded(bits);
  for (auto& diag : h.band) {
    for (auto& v : diag) v *= l;
  }
  for (int i = 0; i < size; ++i) h.band[0][static_cast<std::size_t>(i)] += Real(4L * i + 1, bits);
  return h;
}

int eigenvalues_below(const BandMatrix& a, const Real& sigma) {
  const int n = a.size();
  // Rolling 3x3 upper window of the partially eliminated matrix.
  auto w = a.band;
  for (auto& v : w[0]) v -= sigma;
  int negative = 0;
  for (int k = 0; k < n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    Real pivot = w[0][ku];
    if (pivot.is_zero()) {
      // Exact zero pivot: nudge by one ulp of the shift.
      pivot = abs(sigma);
      mpfr_mul_2si(pivot.get(), pivot.get(), -static_cast<long>(pivot.bits()), MPFR_RNDN);
      if (pivot.is_zero()) pivot = Real(1L, sigma.bits());
      mpfr_mul_2si(pivot.get(), pivot.get(), -static_cast<long>(pivot.bits()), MPFR_RNDN);
    }
    if (pivot < 0L) ++negative;
    // Eliminate rows k+1 and k+2 using row k (symmetric, so A(i,k) = A(k,i)).
    for (int di = 1; di <= 2 && k + di < n; ++di) {
      const Real& aki = w[static_cast<std::size_t>(di)][ku];
      if (aki.is_zero()) continue;
      const Real f = aki / pivot;
      const auto iu = static_cast<std::size_t>(k + di);
      for (int dj = di; dj <= 2 && k + dj < n; ++dj) {
        // A(i, j) with i = k+di, j = k+dj lives at band[dj-di][i].
        w[static_cast<std::size_t>(dj - di)][iu] -= f * w[static_cast<std::size_t>(dj)][ku];
      }
    }
  }
  return negative;
}

Real truncated_ground_state(const Real& lam, int size, Precision precision) {
  require_size(size);
  if (lam < 0L) throw DomainError("oracle requires λ >= 0");
  const mpfr_prec_t bits = precision.bits(kGuardDigits);
  const BandMatrix h = hamiltonian_matrix(lam, size, bits);

  // H = diag(4i+1) + λ·(PSD block) so every eigenvalue is >= 1; e_0 gives an upper bound.
  Real lo(0L, bits);
  Real hi = h.band[0][0] + 1;
  const Real tol = decimal_epsilon(precision.digits() + 5, bits);
  while (hi - lo > tol * hi) {
    Real mid = (lo + hi) / 2;
    if (eigenvalues_below(h, mid) >= 1) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
  }
  return ((lo + hi) / 2).rounded(precision.bits());
}

Real ground_state_energy(const OracleConfig& cfg) {
  require_size(cfg.basis_size);
  Real value = truncated_ground_state(cfg.lam, cfg.basis_size, cfg.precision);
  const Real wider = truncated_ground_state(cfg.lam, cfg.basis_size + kStabilityStep, cfg.precision);
  const Real tol = decimal_epsilon(cfg.tolerance_digits, value.bits());
  if (abs(value - wider) > tol * abs(value)) {
    throw NotConverged("oracle not stable at M=" + std::to_string(cfg.basis_size) + ": E(M)=" + value.to_string(20) +
                       ", E(M+8)=" + wider.to_string(20));
  }
  return value;
}

OracleResult converged_ground_state(const Real& lam, Precision precision, int tolerance_digits, int max_basis) {
  const Real tol = decimal_epsilon(tolerance_digits, precision.bits());
  int size = 24;
  while (size + kStabilityStep <= max_basis) {
    Real value = truncated_ground_state(lam, size, precision);
    const Real wider = truncated_ground_state(lam, size + kStabilityStep, precision);
    Real change = abs(value - wider);
    if (change <= tol * abs(value)) return OracleResult{std::move(value), size, std::move(change)};
    if (size + kStabilityStep == max_basis) break;
    // Grow geometrically, but always test the final admissible size.
    const int grown = (size * 5 / 4 + kStabilityStep - 1) / kStabilityStep * kStabilityStep;
    size = std::min(std::max(grown, size + kStabilityStep), max_basis - kStabilityStep);
  }
  throw NotConverged("oracle did not stabilise to 10^-" + std::to_string(tolerance_digits) + " within " +
                     std::to_string(max_basis) + " even states");
}

}  // namespace resumlab
