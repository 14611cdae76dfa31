#include "resumlab/real.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace resumlab {

namespace {

std::string take_mpfr_string(char* raw) {
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

mpfr_prec_t max_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs; leave `other` as a valid 2-bit zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded(mpfr_prec_t bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int sig) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%#.*Rg", sig, value_);
  return take_mpfr_string(raw);
}

std::string Real::to_scientific(int sig) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", sig - 1, value_);
  return take_mpfr_string(raw);
}

std::string Real::to_fixed(int decimals) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rf", decimals, value_);
  return take_mpfr_string(raw);
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real out(max_bits(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(max_bits(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(max_bits(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(max_bits(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a) {
  Real out(a.bits());
  mpfr_neg(out.value_, a.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, long b) {
  Real out(a.bits());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, long b) {
  Real out(a.bits());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, long b) {
  Real out(a.bits());
  mpfr_add_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, long b) {
  Real out(a.bits());
  mpfr_sub_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real out(x.bits());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.bits());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x.bits());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.bits());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sinh(const Real& x) {
  Real out(x.bits());
  mpfr_sinh(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real cosh(const Real& x) {
  Real out(x.bits());
  mpfr_cosh(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long n) {
  Real out(x.bits());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

Real pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real relative_difference(const Real& a, const Real& b) {
  Real diff = abs(a - b);
  if (b.is_zero()) return diff;
  return diff / abs(b);
}

Real decimal_epsilon(int digits, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_set_si(out.get(), 10, MPFR_RNDN);
  mpfr_pow_si(out.get(), out.get(), -digits, MPFR_RNDN);
  return out;
}

}  // namespace resumlab
