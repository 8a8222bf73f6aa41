#include "germcalc/ordering.hpp"

namespace germ {

int MonomialOrdering::cmp(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::GlobalDegRevLex) return Monomial::cmp_degrevlex(a, b);
  // negative degree, same reverse-lex tie break
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? -1 : 1;
  return Monomial::cmp_degrevlex(a, b);
}

int MonomialOrdering::cmp(int ca, const Monomial& a, int cb, const Monomial& b) const {
  if (ext == ModuleExtension::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return cmp(a, b);
  }
  int c = cmp(a, b);
  if (c) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

Ordering3 compare_monomials(const MonomialOrdering& ord, const Monomial& a,
                            const Monomial& b) {
  int c = ord.cmp(a, b);
  return c < 0 ? Ordering3::Less : c > 0 ? Ordering3::Greater : Ordering3::Equal;
}

}  // namespace germ
