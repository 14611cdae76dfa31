#include <doctest.h>

#include "resumlab/errors.hpp"
#include "resumlab/oracle.hpp"
#include "resumlab/rational.hpp"

using namespace resumlab;

namespace {

Real dec(std::string_view s) { return Real(std::string(s), bits_for_digits(80)); }

}  // namespace

TEST_CASE("harmonic limit") {
  const Precision P(40);
  const Real e = truncated_ground_state(dec("0"), 16, P);
  CHECK(abs(e - 1L) < decimal_epsilon(35, e.bits()));
  CHECK(abs(converged_ground_state(dec("0"), P).value - 1L) < decimal_epsilon(35, e.bits()));
}

TEST_CASE("published ground-state energies") {
  const Precision P(40);
  const auto one = converged_ground_state(dec("1"), P);
  CHECK(relative_difference(one.value, dec("1.39235164153029")) < dec("1e-10"));
  CHECK(one.basis_size <= 200);
  const auto hundred = converged_ground_state(dec("100"), P);
  CHECK(relative_difference(hundred.value, dec("4.99941754513759")) < dec("1e-10"));
  CHECK(hundred.stability <= hundred.value * dec("1e-12"));
}

TEST_CASE("x^4 by squaring matches the closed form") {
  const mpfr_prec_t bits = 200;
  const BandMatrix squared = even_x4_matrix(10, bits);
  const BandMatrix closed = even_x4_closed_form(10, bits);
  CHECK(squared.size() == 10);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(abs(squared.at(i, j) - closed.at(i, j)) <= decimal_epsilon(55, bits));
    }
  }
  // <0|x⁴|0> = 3/4 with x = (a + a†)/√2.
  CHECK(closed.at(0, 0) == Real(Rational(3, 4), bits));
  CHECK(closed.at(0, 3).is_zero());
}

TEST_CASE("inertia count") {
  const BandMatrix h = hamiltonian_matrix(dec("0"), 6, 128);
  CHECK(eigenvalues_below(h, Real(Rational(1, 2), 128)) == 0);
  CHECK(eigenvalues_below(h, Real(6L, 128)) == 2);
  CHECK(eigenvalues_below(h, Real(100L, 128)) == 6);
}

TEST_CASE("energy grows with coupling") {
  const Precision P(30);
  Real previous = truncated_ground_state(dec("0"), 60, P);
  for (const char* text : {"0.1", "0.5", "1", "4", "10"}) {
    const Real e = truncated_ground_state(dec(text), 60, P);
    CHECK(e > previous);
    previous = e;
  }
}

TEST_CASE("truncated energies decrease toward the limit") {
  const Precision P(30);
  const Real lam = dec("10");
  const Real small = truncated_ground_state(lam, 16, P);
  const Real large = truncated_ground_state(lam, 64, P);
  CHECK(large <= small);
}

TEST_CASE("convergence failures are reported") {
  OracleConfig cfg;
  cfg.basis_size = 8;
  cfg.precision = Precision(30);
  cfg.lam = dec("2000");
  cfg.tolerance_digits = 12;
  CHECK_THROWS_AS(ground_state_energy(cfg), NotConverged);
  CHECK_THROWS_AS(converged_ground_state(dec("2000"), Precision(30), 12, 48), NotConverged);
  cfg.basis_size = 2;
  CHECK_THROWS_AS(ground_state_energy(cfg), InvalidArgument);
  CHECK_THROWS_AS(converged_ground_state(dec("-1"), Precision(30)), DomainError);
}
