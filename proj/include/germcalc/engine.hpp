#pragma once

#include "germcalc/module.hpp"
#include "germcalc/ordering.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace germ {

/// Resource limits for basis computations.  Zero means unlimited.  A step is
/// one reduction inside the normal-form loop.
struct ComputeLimits {
  uint64_t step_budget = 0;
  double time_budget_s = 0.0;
  bool trace = false;  // S-pair diagnostics on stderr
};

/// Raised when a computation runs out of its step or time budget.  The
/// computation never returns a partial or wrong value instead.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Vector-space dimension of a quotient, which may be infinite.
class Colength {
public:
  static Colength finite(long v);
  static Colength infinite() { return Colength(false, 0); }

  bool is_finite() const { return finite_; }
  long value() const;  // throws std::logic_error when infinite

  bool operator==(const Colength& o) const {
    return finite_ == o.finite_ && v_ == o.v_;
  }
  bool operator!=(const Colength& o) const { return !(*this == o); }

  std::string str() const;  // "17" or "INFINITE"

private:
  Colength(bool f, long v) : finite_(f), v_(v) {}
  bool finite_;
  long v_;
};

struct StandardBasisResult {
  MonomialOrdering ordering;
  int rank = 1;
  std::vector<TermVector> basis;
  /// (component, monomial) of each basis element's leading term.
  std::vector<std::pair<int, Monomial>> leading_module;
};

/// Free resolution of a quotient O^r / M.  maps[i] sends O^{ranks[i+1]} to
/// O^{ranks[i]}; columns are the images of the basis vectors.  Consecutive
/// maps compose to zero; when minimal, no entry is a unit at the origin.
struct Resolution {
  std::vector<PolyMatrix> maps;
  std::vector<int> ranks;
  bool minimal = false;
};

/// Weak normal form of v against the list G.  For local orderings this is
/// Mora's ecart-driven reduction, which may enlist intermediate remainders as
/// reducers; the result r satisfies u*v - r in <G> for some unit u.
TermVector normal_form(const TermVector& v, const std::vector<TermVector>& G,
                       const MonomialOrdering& ord, const ComputeLimits& lim = {});
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       const MonomialOrdering& ord, const ComputeLimits& lim = {});

/// Buchberger (global) or Mora (local) completion of the generators.  The
/// returned basis is interreduced on leading terms and every element is monic.
StandardBasisResult standard_basis(const Submodule& M, const MonomialOrdering& ord,
                                   const ComputeLimits& lim = {});

/// Number of (component, monomial) pairs outside the leading module.
Colength colength(const StandardBasisResult& sb);
Colength colength(const Submodule& M, const MonomialOrdering& ord,
                  const ComputeLimits& lim = {});

/// Krull dimension of the quotient by an ideal (rank 1), via maximal variable
/// sets meeting no leading monomial's support.  The unit ideal gives -1.
int krull_dimension(const Submodule& M, const MonomialOrdering& ord,
                    const ComputeLimits& lim = {});

/// Generators of {(a_1,...,a_m) : sum a_i G_i = 0}, computed from a standard
/// basis of the graph module <G_i + e_{r+i}> with the original block
/// eliminating.  Every returned vector satisfies the relation exactly.
Submodule syzygy_module(const std::vector<TermVector>& G, const MonomialOrdering& ord,
                        const ComputeLimits& lim = {});

/// Minimal free resolution of O^r / M over the local ring at the origin, by
/// iterated syzygies with unit entries eliminated (Nakayama).  Throws
/// std::domain_error when the quotient is the zero module.
Resolution minimal_free_resolution(const Submodule& M, const ComputeLimits& lim = {});

/// depth(O^r / M) = n - length(minimal resolution) (Auslander-Buchsbaum).
int depth(const Submodule& M, const ComputeLimits& lim = {});

/// Membership of v in M over the ring selected by ord (local: the localized
/// module at the origin).
bool module_membership(const TermVector& v, const Submodule& M,
                       const MonomialOrdering& ord, const ComputeLimits& lim = {});
bool module_equality(const Submodule& A, const Submodule& B,
                     const MonomialOrdering& ord, const ComputeLimits& lim = {});

}  // namespace germ
