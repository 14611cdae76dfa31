#pragma once

#include <vector>

#include "resumlab/rat_poly.hpp"

namespace resumlab {

/// Sturm sequence of the square-free part of a nonzero polynomial. Counts
/// distinct real roots exactly over the rationals.
class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& p);

  /// Number of sign changes at x, zeros skipped.
  int variations_at(const Rational& x) const;
  int variations_at(const Bound& x) const;

  /// Distinct real roots strictly inside (lo, hi).
  int count_open(const Bound& lo, const Bound& hi) const;

  const std::vector<RatPoly>& chain() const noexcept { return chain_; }
  /// Rational strictly larger than the modulus of every root.
  const Rational& root_bound() const noexcept { return root_bound_; }

 private:
  std::vector<RatPoly> chain_;
  Rational root_bound_;
};

/// Cauchy bound 1 + max |a_i / a_n|; every complex root has smaller modulus.
Rational cauchy_root_bound(const RatPoly& p);

/// Exact count of distinct real roots of p in the open interval (lo, hi).
/// Throws ZeroPolynomial for p = 0 and InvalidArgument unless lo < hi.
int count_real_roots(const RatPoly& p, const Bound& lo, const Bound& hi);

}  // namespace resumlab
