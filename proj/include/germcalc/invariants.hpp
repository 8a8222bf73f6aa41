#pragma once

#include "germcalc/logarithmic.hpp"

#include <optional>

namespace germ {

/// Raised when repeated random draws fail to agree on one finite generic
/// value, so no draw can be certified as generic.
struct CertificationError : std::runtime_error {
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

/// One computed invariant with enough context to reproduce it: the formula
/// route taken, a digest of the inputs and every hypothesis that was assumed
/// rather than verified.
struct InvariantReport {
  std::string name;
  Colength value = Colength::infinite();
  std::string route;
  std::string inputs_digest;
  std::vector<std::string> assumptions;
};

/// An equality of two integers computed along independent routes.  A missing
/// side means that route produced an infinite colength.  Differences of
/// colengths may be negative, hence the signed values.
struct IdentityCheck {
  std::string identity;             // short stable id
  std::string statement;            // the equation in readable form
  std::optional<long> left, right;  // nullopt encodes INFINITE
  bool holds = false;
  std::vector<std::string> assumptions;
};

/// 16-hex FNV-1a digest of the canonical text forms of the inputs.
std::string inputs_digest(const std::vector<std::string>& parts);

/// Colength of the Jacobian ideal at the origin; INFINITE exactly when the
/// singularity is not isolated.
Colength milnor_hypersurface(const Polynomial& f, const ComputeLimits& lim = {});

/// Colength of <phi> plus the maximal minors of the stacked Jacobian of
/// (phi, g); equals mu(X) + mu(X cap g^{-1}(0)) for an ICIS pair.
Colength le_greuel_colength(const MapGerm& phi, const Polynomial& g,
                            const ComputeLimits& lim = {});

/// Milnor number of f restricted to X, as the colength of I_X plus the
/// maximal minors of the stacked Jacobian of (equations, f).
Colength milnor_restricted(const VarietyGerm& x, const Polynomial& f,
                           const ComputeLimits& lim = {});

/// Tjurina number of a complete intersection: module colength of O^k by the
/// Jacobian columns and the I_X-multiples of the unit vectors.  The ambient
/// germ gives 0.
Colength tjurina_icis(const VarietyGerm& x, const ComputeLimits& lim = {});

/// Bruce-Roberts number of f with respect to X: colength of df(Theta_X),
/// plus I_X when relative.
Colength bruce_roberts(const Polynomial& f, const VarietyGerm& x, bool relative,
                       const ComputeLimits& lim = {});

/// The relative Bruce-Roberts number assembled without tangent fields:
/// mu(X cap f^{-1}(0)) + mu(X) - tau(X).
Colength br_minus_via_formula(const VarietyGerm& x, const Polynomial& f,
                              const ComputeLimits& lim = {});

/// Index of a 1-form collection on X: colength of I_X plus, for every
/// subcollection, the maximal minors of the equations' differentials stacked
/// over the subcollection's forms.  Shapes are validated against dim X.
Colength chern_index(const VarietyGerm& x, const OneFormCollection& c,
                     const ComputeLimits& lim = {});

/// A random linear collection whose index is certified generic: `trials`
/// independent draws must agree on one finite value.
struct GenericCertificate {
  OneFormCollection collection;  // the last draw that passed
  long index = 0;
  int trials = 0;
};
GenericCertificate certify_generic(const VarietyGerm& x, const std::vector<int>& sizes,
                                   uint64_t seed, int trials = 3,
                                   const ComputeLimits& lim = {});

/// Chern number of the collection: its index minus the certified generic
/// linear index of the same shape.
Colength chern_number(const VarietyGerm& x, const OneFormCollection& c, uint64_t seed,
                      int trials = 3, const ComputeLimits& lim = {});

/// Chern number of {df1} on X cap f2^{-1}(0) along the Bruce-Roberts route:
/// relative BR number of f1 there minus the one of a certified generic
/// linear function.
Colength chern_df1_via_br(const VarietyGerm& x, const Polynomial& f1, const Polynomial& f2,
                          uint64_t seed, int trials = 3, const ComputeLimits& lim = {});

/// Euler obstruction of f1 on the slice X cap f2^{-1}(0), reported as the
/// Chern number of {df1} there; the unverifiable hypotheses and the sign
/// convention ride along in the report.
InvariantReport euler_obstruction_function(const VarietyGerm& x, const Polynomial& f1,
                                           const Polynomial& f2, uint64_t seed,
                                           int trials = 3, const ComputeLimits& lim = {});

/// Number of cusps of a stable perturbation of f restricted to X: colength
/// of I_X plus the signed maximal minors of the Jacobian of
/// (equations, f, Delta).
Colength cusps_count(const VarietyGerm& x, const MapGerm& f, const ComputeLimits& lim = {});

/// Evaluates the cross-identities between cusp counts, restricted Milnor
/// numbers, Chern indices/numbers and slice invariants for a corank-2 setup
/// (equations plus two map components filling the ambient dimension).  Both
/// sides of every check are computed along independent routes.
std::vector<IdentityCheck> identity_report(const VarietyGerm& x, const MapGerm& f,
                                           uint64_t seed, int trials = 3,
                                           const ComputeLimits& lim = {});

/// Multiplicativity of the relative Bruce-Roberts number under suspension by
/// h in fresh variables: both sides of muBR-(f+h, X~) = mu(h) * muBR-(f, X).
IdentityCheck suspension_check(const VarietyGerm& x, const Polynomial& f,
                               const std::vector<std::string>& new_names,
                               const std::string& h_text, const ComputeLimits& lim = {});

}  // namespace germ
