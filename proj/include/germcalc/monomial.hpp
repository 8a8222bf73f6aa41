#pragma once

#include <cstdint>
#include <vector>

namespace germ {

/// Exponent vector with cached total degree.  Exponents are bounded by
/// 16 bits; arithmetic checks for overflow.
class Monomial {
public:
  explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {}
  static Monomial from_exponents(const std::vector<unsigned>& exps);
  static Monomial variable(int nvars, int i, unsigned power = 1);

  int nvars() const { return static_cast<int>(e_.size()); }
  unsigned exp(int i) const { return e_[static_cast<size_t>(i)]; }
  uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial quotient_by(const Monomial& o) const;  // pre: o divides *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  /// Degree first, then reverse-lexicographic tie break: of two monomials of
  /// equal degree the one with the smaller exponent in the last differing
  /// position is the larger.  Returns negative/zero/positive.
  static int cmp_degrevlex(const Monomial& a, const Monomial& b);

  /// Total order used only for deterministic containers (not the ring order).
  bool operator<(const Monomial& o) const;

private:
  std::vector<uint16_t> e_;
  uint32_t deg_ = 0;
};

}  // namespace germ
