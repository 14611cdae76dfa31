#include "resumlab/sturm.hpp"

#include "resumlab/errors.hpp"

namespace resumlab {

Rational cauchy_root_bound(const RatPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("root bound of the zero polynomial");
  Rational worst = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficient(static_cast<std::size_t>(i))) / lc;
    if (r > worst) worst = r;
  }
  return worst + 1;
}

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm sequence of the zero polynomial");

  // Square-free part keeps every root simple, so V(a) - V(b) counts (a, b].
  RatPoly base = p;
  if (p.degree() > 0) {
    const RatPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) base = divmod(p, g).first;
  }
  root_bound_ = cauchy_root_bound(base);

  // Positive rescalings leave every sign, hence every variation count, unchanged.
  chain_.push_back(primitive_part(base));
  if (base.degree() == 0) return;
  chain_.push_back(primitive_part(base.derivative()));
  while (true) {
    RatPoly r = primitive_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at(const Bound& x) const {
  switch (x.kind) {
    case Bound::Kind::PosInf:
      return variations_at(root_bound_);
    case Bound::Kind::NegInf:
      return variations_at(Rational(-root_bound_));
    case Bound::Kind::Finite:
      break;
  }
  return variations_at(x.value);
}

int SturmSequence::count_open(const Bound& lo, const Bound& hi) const {
  if (!(lo < hi)) throw InvalidArgument("root-count interval requires lo < hi");
  int count = variations_at(lo) - variations_at(hi);
  if (hi.is_finite() && chain_.front().sign_at(hi.value) == 0) --count;
  return count;
}

int count_real_roots(const RatPoly& p, const Bound& lo, const Bound& hi) {
  return SturmSequence(p).count_open(lo, hi);
}

}  // namespace resumlab
