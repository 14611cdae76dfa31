#pragma once

#include <mpfr.h>

#include <cmath>

#include "resumlab/errors.hpp"

namespace resumlab {

/// Working precision expressed in significant decimal digits.
class Precision {
 public:
  static constexpr int kMin = 15;
  static constexpr int kMax = 300;
  static constexpr int kDefault = 60;

  constexpr Precision() = default;
  explicit Precision(int digits) : digits_(digits) {
    if (digits < kMin || digits > kMax) {
      throw InvalidArgument("precision must lie in [15, 300] digits, got " + std::to_string(digits));
    }
  }

  constexpr int digits() const noexcept { return digits_; }

  /// Binary precision carrying `digits` decimals plus `guard_digits` extra.
  mpfr_prec_t bits(int guard_digits = 0) const noexcept {
    return static_cast<mpfr_prec_t>(std::ceil((digits_ + guard_digits) * 3.321928094887362)) + 8;
  }

  friend constexpr bool operator==(Precision, Precision) = default;

 private:
  int digits_ = kDefault;
};

/// Binary precision for an arbitrary digit count; no range check.
inline mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

}  // namespace resumlab
