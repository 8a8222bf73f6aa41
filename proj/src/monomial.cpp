#include "germcalc/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace germ {

Monomial Monomial::from_exponents(const std::vector<unsigned>& exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > std::numeric_limits<uint16_t>::max())
      throw std::overflow_error("monomial exponent exceeds 16 bits");
    m.e_[i] = static_cast<uint16_t>(exps[i]);
    m.deg_ += exps[i];
  }
  return m;
}

Monomial Monomial::variable(int nvars, int i, unsigned power) {
  std::vector<unsigned> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = power;
  return from_exponents(e);
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) {
    unsigned s = static_cast<unsigned>(e_[i]) + o.e_[i];
    if (s > std::numeric_limits<uint16_t>::max())
      throw std::overflow_error("monomial exponent exceeds 16 bits");
    r.e_[i] = static_cast<uint16_t>(s);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<uint16_t>(e_[i] - o.e_[i]);
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  r.deg_ = 0;
  for (size_t i = 0; i < r.e_.size(); ++i) {
    r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    r.deg_ += r.e_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

int Monomial::cmp_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
  for (size_t i = a.e_.size(); i-- > 0;) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? -1 : 1;
  }
  return 0;
}

bool Monomial::operator<(const Monomial& o) const {
  return cmp_degrevlex(*this, o) < 0;
}

}  // namespace germ
