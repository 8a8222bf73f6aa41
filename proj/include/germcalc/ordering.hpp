#pragma once

#include "germcalc/monomial.hpp"

namespace germ {

enum class OrderKind {
  GlobalDegRevLex,   // degree then reverse lex; 1 is the smallest monomial
  LocalNegDegRevLex  // negative degree then reverse lex; 1 is the largest
};

/// How a scalar ordering extends to free-module terms.
enum class ModuleExtension {
  None,              // scalar use only
  TermOverPosition,  // monomial first, lower component wins ties
  PositionOverTerm   // lower component first, then monomial
};

enum class Ordering3 { Less, Equal, Greater };

struct MonomialOrdering {
  OrderKind kind = OrderKind::GlobalDegRevLex;
  ModuleExtension ext = ModuleExtension::None;

  bool is_global() const { return kind == OrderKind::GlobalDegRevLex; }
  bool is_local() const { return kind == OrderKind::LocalNegDegRevLex; }

  static MonomialOrdering global(ModuleExtension e = ModuleExtension::None) {
    return {OrderKind::GlobalDegRevLex, e};
  }
  static MonomialOrdering local(ModuleExtension e = ModuleExtension::None) {
    return {OrderKind::LocalNegDegRevLex, e};
  }

  /// Scalar comparison, negative/zero/positive as a </==/> b.
  int cmp(const Monomial& a, const Monomial& b) const;

  /// Module-term comparison; ModuleExtension::None behaves as
  /// TermOverPosition so rank-1 and module code paths agree.
  int cmp(int ca, const Monomial& a, int cb, const Monomial& b) const;
};

Ordering3 compare_monomials(const MonomialOrdering& ord, const Monomial& a,
                            const Monomial& b);

}  // namespace germ
