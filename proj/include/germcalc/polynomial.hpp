#pragma once

#include "germcalc/monomial.hpp"
#include "germcalc/ordering.hpp"
#include "germcalc/rational.hpp"
#include "germcalc/ring.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace germ {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over the rationals.  Terms are kept merged, nonzero and
/// sorted in descending degrevlex order, which fixes iteration and printing.
class Polynomial {
public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(Ring ring, Rational c);
  static Polynomial variable(const Ring& ring, int i, unsigned power = 1);
  static Polynomial term(Ring ring, Monomial m, Rational c);
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  int nvars() const { return ring_->nvars(); }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// -1 for the zero polynomial.
  int total_degree() const;
  Rational constant_term() const;
  bool vanishes_at_origin() const { return constant_term().is_zero(); }
  bool is_constant() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  Polynomial derivative(int var) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Re-reads the polynomial in a larger ring; var_map[i] is the index the
  /// i-th variable of the current ring takes in the target.
  Polynomial in_ring(const Ring& target, const std::vector<int>& var_map) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text form: descending terms, explicit * and ^.
  std::string str() const;

private:
  Ring ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Raised on malformed polynomial text; positions are 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int col_) : std::runtime_error(what), col(col_) {}
  int col;
};

/// Grammar (documented in the README):
///   expr   := [sign] term (sign term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := uint ('/' uint)? | var | '(' expr ')'
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace germ
