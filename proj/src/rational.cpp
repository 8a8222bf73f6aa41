#include "germcalc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace germ {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  auto digits = [&](std::string& out) {
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') out += s[i++];
    return i > start;
  };
  std::string num, den;
  if (!digits(num)) throw std::invalid_argument("malformed rational literal");
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!digits(den)) throw std::invalid_argument("malformed rational literal");
  }
  if (i != s.size()) throw std::invalid_argument("malformed rational literal");
  Rational r;
  if (den.empty()) {
    r.v_ = mpq_class(mpz_class(num));
  } else {
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    r.v_ = mpq_class(mpz_class(num), d);
    r.v_.canonicalize();
  }
  if (neg) r.v_ = -r.v_;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace germ
