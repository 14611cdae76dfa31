#include "resumlab/rat_poly.hpp"

#include <sstream>

#include "resumlab/errors.hpp"

namespace resumlab {

namespace {
constexpr int kEvalGuardDigits = 10;
}

RatPoly::RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<Rational> coefficients) : RatPoly(std::vector<Rational>(coefficients)) {}

RatPoly RatPoly::monomial(Rational c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = std::move(c);
  return RatPoly(std::move(v));
}

Rational RatPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPoly::leading() const {
  if (is_zero()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

int RatPoly::sign_at(const Rational& x) const { return sgn((*this)(x)); }

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

RatPoly RatPoly::abs_normalized() const {
  if (is_zero()) return {};
  RatPoly out = *this;
  const Rational scale = abs(leading());
  for (auto& c : out.coeffs_) c /= scale;
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a) {
  RatPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) os << "-";
    os << resumlab::to_string(Rational(abs(coeffs_[i])));
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly{}, num};

  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational& lc = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + dn - 1] / lc;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d[j];
  }
  rem.resize(dn - 1);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

namespace {

using IntPoly = std::vector<Integer>;

IntPoly to_primitive_ints(const RatPoly& p) {
  const auto& c = p.coefficients();
  Integer l = 1;
  for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntPoly out(c.size());
  Integer content = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = c[i].get_num() * (l / c[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

RatPoly from_ints(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return RatPoly(std::move(c));
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  Integer content = 0;
  for (const auto& v : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1) {
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  }
}

/// |lc(b)|^k · a − q·b for the k that clears the division; positive multiple of rem(a, b).
IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer lead_abs = abs(b.back());
  const int lead_sign = sgn(b.back());
  trim(r);
  while (r.size() > db) {
    const std::size_t shift = r.size() - 1 - db;
    const Integer c = r.back();
    for (auto& v : r) v *= lead_abs;
    for (std::size_t j = 0; j <= db; ++j) {
      if (lead_sign > 0) r[shift + j] -= c * b[j];
      else r[shift + j] += c * b[j];
    }
    trim(r);
  }
  make_primitive(r);
  return r;
}

}  // namespace

RatPoly primitive_part(const RatPoly& p) { return from_ints(to_primitive_ints(p)); }

RatPoly primitive_remainder(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  return from_ints(pseudo_remainder(to_primitive_ints(a), to_primitive_ints(b)));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  IntPoly x = to_primitive_ints(a);
  IntPoly y = to_primitive_ints(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return from_ints(x).monic();
}

std::vector<Rational> series_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      std::size_t terms) {
  std::vector<Rational> out(terms);
  for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Rational> series_inverse(const std::vector<Rational>& a, std::size_t terms) {
  if (a.empty() || a[0] == 0) throw DomainError("series with zero constant term has no inverse");
  std::vector<Rational> inv(terms);
  if (terms == 0) return inv;
  inv[0] = 1 / a[0];
  for (std::size_t k = 1; k < terms; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * inv[k - j];
    inv[k] = -acc / a[0];
  }
  return inv;
}

Real horner(const std::vector<Real>& coefficients, const Real& x) {
  Real acc(x.bits());
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Real poly_eval(const RatPoly& p, const Real& x, Precision precision) {
  const mpfr_prec_t bits = precision.bits(kEvalGuardDigits);
  const Real xw = x.rounded(std::max(bits, x.bits()));
  Real acc(xw.bits());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= xw;
    acc += Real(*it, xw.bits());
  }
  return acc.rounded(precision.bits());
}

Real poly_eval(const RatPoly& p, const Rational& x, Precision precision) {
  return Real(p(x), precision.bits());
}

}  // namespace resumlab
