#pragma once

#include "germcalc/engine.hpp"

namespace germ::testing {

/// Direct Buchberger re-check with no pair criteria: the S-vector of every
/// two basis elements sharing a lead component must reduce to zero.  Basis
/// elements coming out of standard_basis are monic, so coefficients drop out.
inline bool all_spairs_reduce(const StandardBasisResult& sb,
                              const MonomialOrdering& ord,
                              const ComputeLimits& lim = {}) {
  const auto& B = sb.basis;
  for (size_t i = 0; i < B.size(); ++i) {
    for (size_t j = i + 1; j < B.size(); ++j) {
      auto [ci, mi] = sb.leading_module[i];
      auto [cj, mj] = sb.leading_module[j];
      if (ci != cj) continue;
      Monomial l = Monomial::lcm(mi, mj);
      const Ring& ring = B[i].ring();
      TermVector s =
          B[i].scaled(Polynomial::term(ring, l.quotient_by(mi), Rational(1))) -
          B[j].scaled(Polynomial::term(ring, l.quotient_by(mj), Rational(1)));
      if (!normal_form(s, B, ord, lim).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace germ::testing
