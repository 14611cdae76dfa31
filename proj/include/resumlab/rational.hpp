#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace resumlab {

/// Exact rational number, always kept in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses a decimal literal such as "0.2", "-13", "1e-6" or "2.5E+3" exactly.
/// Also accepts "p/q". Throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

Integer factorial(unsigned long n);

/// One end of an interval on the extended real line.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };

  Kind kind = Kind::Finite;
  Rational value;

  static Bound finite(Rational v) { return {Kind::Finite, std::move(v)}; }
  static Bound pos_inf() { return {Kind::PosInf, Rational(0)}; }
  static Bound neg_inf() { return {Kind::NegInf, Rational(0)}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  /// "inf", "-inf" or the exact rational.
  std::string to_string() const;
};

/// Strict ordering on the extended line.
bool operator<(const Bound& a, const Bound& b);

}  // namespace resumlab
