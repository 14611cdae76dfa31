#include "resumlab/pade.hpp"

#include <string>

#include "resumlab/errors.hpp"
#include "resumlab/sturm.hpp"

namespace resumlab {

namespace {

/// Bareiss elimination on an integer augmented system [A | b] (n x n+1), then
/// exact back substitution. Returns the rational solution.
std::vector<Rational> bareiss_solve(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && a[pivot_row][k] == 0) ++pivot_row;
    if (pivot_row == n) throw DegeneratePadeSystem("Padé linear system is singular");
    if (pivot_row != k) std::swap(a[pivot_row], a[k]);

    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
    x[i].canonicalize();
  }
  return x;
}

Integer row_denominator_lcm(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace

std::vector<Rational> PadeApproximant::taylor(std::size_t terms) const {
  return series_multiply(numerator.coefficients(), series_inverse(denominator.coefficients(), terms), terms);
}

PadeApproximant construct_pade(const std::vector<Rational>& coeffs, int m, int n) {
  if (n < 0 || m < n) throw InvalidArgument("Padé order requires m >= n >= 0");
  if (coeffs.size() < static_cast<std::size_t>(m + n + 1)) {
    throw InvalidOrder("[" + std::to_string(m) + "," + std::to_string(n) + "] Padé needs " +
                       std::to_string(m + n + 1) + " coefficients, got " + std::to_string(coeffs.size()));
  }
  auto c = [&coeffs](int k) -> Rational { return k < 0 ? Rational(0) : coeffs[static_cast<std::size_t>(k)]; };

  // Denominator: sum_{j=1}^{n} c_{k-j} q_j = -c_k for k = m+1..m+n.
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  q[0] = 1;
  if (n > 0) {
    std::vector<std::vector<Integer>> system;
    system.reserve(static_cast<std::size_t>(n));
    for (int row = 0; row < n; ++row) {
      const int k = m + 1 + row;
      std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
      for (int j = 1; j <= n; ++j) r[static_cast<std::size_t>(j - 1)] = c(k - j);
      r[static_cast<std::size_t>(n)] = -c(k);
      const Integer scale = row_denominator_lcm(r);
      std::vector<Integer> ints(r.size());
      for (std::size_t j = 0; j < r.size(); ++j) {
        Rational scaled = r[j] * scale;
        ints[j] = scaled.get_num();
      }
      system.push_back(std::move(ints));
    }
    const auto solution = bareiss_solve(std::move(system));
    for (int j = 1; j <= n; ++j) q[static_cast<std::size_t>(j)] = solution[static_cast<std::size_t>(j - 1)];
  }

  // Numerator: p_k = sum_{i=0}^{min(k,n)} q_i c_{k-i}.
  std::vector<Rational> p(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    Rational acc = 0;
    for (int i = 0; i <= std::min(k, n); ++i) acc += q[static_cast<std::size_t>(i)] * c(k - i);
    p[static_cast<std::size_t>(k)] = acc;
  }
  return PadeApproximant{m, n, RatPoly(std::move(p)), RatPoly(std::move(q))};
}

Real evaluate(const PadeApproximant& pa, const Real& x, Precision precision) {
  const PadeEvaluator eval(pa, precision.bits(10));
  return eval(x.rounded(std::max(eval.bits(), x.bits()))).rounded(precision.bits());
}

ScreeningReport screen(const PadeApproximant& pa, const Bound& lo, const Bound& hi, CommonFactors policy) {
  RatPoly poles = pa.denominator;
  if (policy == CommonFactors::Cancel && !pa.numerator.is_zero()) {
    const RatPoly g = gcd(pa.numerator, pa.denominator);
    if (g.degree() > 0) poles = divmod(pa.denominator, g).first;
  }
  ScreeningReport report{pa.m, pa.n, lo, hi, 0, true};
  report.pole_count = poles.degree() > 0 ? count_real_roots(poles, lo, hi) : 0;
  report.proper = report.pole_count == 0;
  return report;
}

PadeEvaluator::PadeEvaluator(const PadeApproximant& pa, mpfr_prec_t bits) : bits_(bits) {
  for (const auto& a : pa.numerator.coefficients()) num_.emplace_back(a, bits);
  for (const auto& b : pa.denominator.coefficients()) {
    den_.emplace_back(b, bits);
    den_abs_.push_back(abs(den_.back()));
  }
}

Real PadeEvaluator::operator()(const Real& x) const {
  const Real den = horner(den_, x);
  // Cancellation check: |Q(x)| against Σ|q_i||x|^i.
  const Real scale = horner(den_abs_, abs(x));
  Real floor = scale;
  mpfr_mul_2si(floor.get(), floor.get(), -(static_cast<long>(bits_) - 16), MPFR_RNDN);
  if (abs(den) <= floor) throw PoleHit("evaluation at a pole of the Padé approximant");
  return horner(num_, x) / den;
}

}  // namespace resumlab
