#include <doctest.h>

#include <chrono>

#include "reference_values.hpp"
#include "resumlab/errors.hpp"
#include "resumlab/rs_series.hpp"

using namespace resumlab;

namespace {

const CoeffTable& table50() {
  static const CoeffTable t = CoeffTable::compute(50);
  return t;
}

Real dec(std::string_view s, int digits = 60) { return Real(std::string(s), bits_for_digits(digits + 20)); }

}  // namespace

TEST_CASE("low-order coefficients") {
  CHECK(CoeffTable::compute(0).energy(0) == 1);
  CHECK(CoeffTable::compute(0).max_order() == 0);
  CHECK(CoeffTable::compute(1).energy(1) == Rational(3, 4));

  const CoeffTable t = CoeffTable::compute(2);
  CHECK(t.energy(2) == Rational(-21, 16));
  const auto& b2 = t.b_coefficients(2);
  REQUIRE(b2.size() == 4);
  CHECK(b2[0] == Rational(21, 32));
  CHECK(b2[1] == Rational(31, 128));
  CHECK(b2[2] == Rational(13, 192));
  CHECK(b2[3] == Rational(1, 128));

  const auto& b1 = t.b_coefficients(1);
  CHECK(b1[0] == Rational(-3, 8));
  CHECK(b1[1] == Rational(-1, 8));
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS(CoeffTable::compute(-1), InvalidOrder);
  CHECK_THROWS_AS(CoeffTable::compute(201), InvalidOrder);
  CHECK_THROWS_AS(partial_sum(table50(), 51, Rational(1), Precision(30)), InvalidOrder);
}

TEST_CASE("all published coefficients match exactly") {
  const CoeffTable t = CoeffTable::compute(30);
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(to_string(t.energy(n)) == published::kCoefficients[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("printed series prefix") {
  const std::vector<Rational> expected{Rational(1),           Rational(3, 4),         Rational(-21, 16),
                                       Rational(333, 64),     Rational(-30885, 1024), Rational(916731, 4096),
                                       Rational(-65518401, 32768)};
  for (int n = 0; n < 7; ++n) CHECK(table50().energy(n) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("coefficient table invariants") {
  const auto& t = table50();
  CHECK(t.energy(0) == 1);
  for (int n = 1; n <= 50; ++n) {
    CAPTURE(n);
    CHECK(t.energy(n) == -2 * t.b_coefficients(n)[0]);
    CHECK(t.b_coefficients(n).size() == static_cast<std::size_t>(2 * n));
    if (n < 50) CHECK(sgn(t.energy(n)) * sgn(t.energy(n + 1)) < 0);
  }
}

TEST_CASE("wavefunction polynomials satisfy the perturbation hierarchy exactly") {
  // 2x F_n' - F_n'' + x^4 F_{n-1} = Σ_{k=1}^{n} E(k) F_{n-k}, checked as exact polynomials.
  const auto& t = table50();
  const RatPoly x{Rational(0), Rational(1)};
  const RatPoly x4 = RatPoly::monomial(Rational(1), 4);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const RatPoly f = t.wavefunction_polynomial(n);
    CHECK(f(Rational(0)) == 0);
    const RatPoly lhs = x * f.derivative() * Rational(2) - f.derivative().derivative() + x4 * t.wavefunction_polynomial(n - 1);
    RatPoly rhs;
    for (int k = 1; k <= n; ++k) rhs += t.wavefunction_polynomial(n - k) * t.energy(k);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("energies-only tables") {
  const auto t = CoeffTable::from_energies({Rational(1), Rational(3, 4)});
  CHECK(t.max_order() == 1);
  CHECK_FALSE(t.has_wavefunction_data());
  CHECK_THROWS_AS(t.b_coefficients(1), InvalidArgument);
  CHECK_THROWS_AS(CoeffTable::from_energies({Rational(2)}), InvalidArgument);
}

TEST_CASE("partial sums at the published N=1 rows") {
  const Precision P(40);
  const auto& t = table50();
  CHECK(partial_sum(t, 2, Rational(1, 5), P) == Real(Rational(439, 400), P.bits()));
  CHECK(partial_sum(t, 2, Rational(1), P) == Real(Rational(7, 16), P.bits()));
  CHECK(partial_sum(t, 2, Rational(4), P) == -17L);
  CHECK(partial_sum(t, 2, Rational(100), P) == -13049L);
  for (int M : {0, 3, 17, 50}) CHECK(partial_sum(t, M, Rational(0), P) == 1L);
  // Real-argument path agrees with the exact path.
  CHECK(relative_difference(partial_sum(t, 2, dec("0.2"), P), dec("1.0975")) < decimal_epsilon(38, 200));
}

TEST_CASE("partial-sum column of the convergence tables") {
  const Precision P(40);
  for (const auto& block : published::convergence_tables()) {
    const Rational lam = parse_rational(block.lambda);
    for (const auto& row : block.rows) {
      CAPTURE(block.lambda);
      CAPTURE(row.order);
      const Real got = partial_sum(table50(), 2 * row.order, lam, P);
      const Real want = dec(row.rs);
      // Scientific entries carry 10 significant digits, plain ones 15.
      const int digits = row.rs.find('e') != std::string_view::npos ? 10 : 14;
      CHECK(relative_difference(got, want) <= Real(5L, 64) * decimal_epsilon(digits, 200));
    }
  }
}

TEST_CASE("partial sums diverge at small coupling") {
  const Precision P(40);
  Real previous = abs(partial_sum(table50(), 10, Rational(1, 5), P));
  for (int N = 6; N <= 25; ++N) {
    const Real now = abs(partial_sum(table50(), 2 * N, Rational(1, 5), P));
    CHECK(now > previous);
    previous = now;
  }
  CHECK(previous > Real(std::string("1e37"), 128));
}

TEST_CASE("asymptotic ratio") {
  const auto& t = table50();
  CHECK(asymptotic_ratio(t, 1) == Rational(-7, 4));
  CHECK(asymptotic_ratio(t, 2) == Rational(-111, 28));
  auto deviation = [&](int n) -> Rational {
    const Rational predicted = Rational(-3, 2) * (Rational(n) + Rational(1, 2));
    return abs(asymptotic_ratio(t, n) / predicted - 1);
  };
  CHECK(deviation(49) < Rational(5, 100));
  CHECK(deviation(49) < deviation(20));
}

TEST_CASE("order 50 is fast") {
  const auto start = std::chrono::steady_clock::now();
  const auto t = CoeffTable::compute(50);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(t.max_order() == 50);
  CHECK(seconds < 60.0);
}
