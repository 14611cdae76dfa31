#pragma once

#include <vector>

#include "resumlab/precision.hpp"
#include "resumlab/rat_poly.hpp"
#include "resumlab/rational.hpp"
#include "resumlab/real.hpp"

namespace resumlab {

/// Exact Rayleigh–Schrödinger ground-state coefficients of
/// -d²/dx² + x² + λx⁴, together with the polynomial wavefunction data
/// u_n(x) = exp(-x²/2) F_n(x), F_n(x) = Σ_{k=1}^{2n} b_k x^{2k}.
class CoeffTable {
 public:
  static constexpr int kMaxOrder = 200;

  /// Runs the Dalgarno–Stewart recursion through `order`.
  static CoeffTable compute(int order);
  /// Table holding energies only (no wavefunction data), e.g. from a cache file.
  /// Checks E(0) = 1.
  static CoeffTable from_energies(std::vector<Rational> energies);

  int max_order() const noexcept { return static_cast<int>(energies_.size()) - 1; }
  const std::vector<Rational>& energies() const noexcept { return energies_; }
  const Rational& energy(int n) const;

  bool has_wavefunction_data() const noexcept { return !b_.empty(); }
  /// b_1..b_{2n} of order n (index 0 holds b_1). Empty for n = 0.
  const std::vector<Rational>& b_coefficients(int n) const;
  /// F_n as a polynomial in x; F_0 = 1.
  RatPoly wavefunction_polynomial(int n) const;

  /// First `count` energies (count <= max_order + 1).
  std::vector<Rational> prefix(int count) const;

 private:
  std::vector<Rational> energies_;
  std::vector<std::vector<Rational>> b_;
};

inline CoeffTable compute_coefficients(int order) { return CoeffTable::compute(order); }

/// Σ_{n=0}^{M} E(n) λ^n at the requested precision.
Real partial_sum(const CoeffTable& table, int order, const Real& lam, Precision precision);
Real partial_sum(const CoeffTable& table, int order, const Rational& lam, Precision precision);

/// E(n+1) / E(n); tends to -(3/2)(n + 1/2) for large n.
Rational asymptotic_ratio(const CoeffTable& table, int n);

}  // namespace resumlab
