#pragma once

#include <array>
#include <vector>

#include "resumlab/precision.hpp"
#include "resumlab/real.hpp"

namespace resumlab {

struct OracleConfig {
  /// Number of even-parity harmonic-oscillator states kept (>= 4).
  int basis_size = 100;
  Precision precision;
  Real lam;
  /// Convergence requires |E(M) - E(M+8)| <= 10^-tolerance_digits · E(M).
  int tolerance_digits = 12;
};

struct OracleResult {
  Real value;
  int basis_size = 0;
  /// |E(M) - E(M+8)|, the quantity tested against the tolerance.
  Real stability;
};

/// Symmetric pentadiagonal matrix stored by diagonals: band[d][i] = A(i, i+d).
struct BandMatrix {
  std::array<std::vector<Real>, 3> band;

  int size() const noexcept { return static_cast<int>(band[0].size()); }
  /// A(i, j) for |i - j| <= 2, zero otherwise.
  Real at(int i, int j) const;
};

/// x² restricted to the even states |0>, |2>, |4>, ... (size K, tridiagonal).
BandMatrix even_x2_matrix(int size, mpfr_prec_t bits);

/// x⁴ block of size M obtained by squaring the (M+4)-state x² matrix and trimming.
BandMatrix even_x4_matrix(int size, mpfr_prec_t bits);

/// x⁴ block of size M from the closed-form matrix elements; used as a cross-check.
BandMatrix even_x4_closed_form(int size, mpfr_prec_t bits);

/// Truncated Hamiltonian diag(2n+1) + λ x⁴ on the first M even states.
BandMatrix hamiltonian_matrix(const Real& lam, int size, mpfr_prec_t bits);

/// Number of eigenvalues strictly below sigma (inertia of A - sigma I by LDLᵀ).
int eigenvalues_below(const BandMatrix& a, const Real& sigma);

/// Lowest eigenvalue of the truncated matrix, by bisection on the inertia count.
Real truncated_ground_state(const Real& lam, int size, Precision precision);

/// Lowest eigenvalue at cfg.basis_size; throws NotConverged when the value moves
/// by more than the tolerance between M and M+8.
Real ground_state_energy(const OracleConfig& cfg);

/// Grows M in steps until the M → M+8 check passes; gives up past max_basis
/// with NotConverged.
OracleResult converged_ground_state(const Real& lam, Precision precision, int tolerance_digits = 12,
                                    int max_basis = 400);

}  // namespace resumlab
