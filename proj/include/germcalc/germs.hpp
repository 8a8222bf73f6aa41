#pragma once

#include "germcalc/module.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace germ {

/// Analytic map germ (C^n, 0) -> (C^k, 0); every component vanishes at the
/// origin.  k == 0 (no components) is allowed and stands for the constant
/// map to a point.
struct MapGerm {
  Ring ring;
  std::vector<Polynomial> components;

  MapGerm(Ring r, std::vector<Polynomial> comps);
  int source_dim() const { return ring->nvars(); }
  int target_dim() const { return static_cast<int>(components.size()); }
};

/// Germ of a variety (X, 0) in (C^n, 0) cut out by the listed equations.
/// An empty generator list is the ambient smooth germ.  `icis_claimed`
/// records the caller's isolated-complete-intersection hypothesis; it is
/// never verified here.
struct VarietyGerm {
  Ring ring;
  std::vector<Polynomial> generators;
  bool icis_claimed = false;

  VarietyGerm(Ring r, std::vector<Polynomial> gens, bool icis = false);
  int ambient_dim() const { return ring->nvars(); }
  int codim() const { return static_cast<int>(generators.size()); }
  /// Expected dimension: ambient minus number of equations.
  int dim() const { return ambient_dim() - codim(); }
};

/// A 1-form written in the coordinate basis: n coefficient polynomials,
/// one per dx_i.
using OneForm = std::vector<Polynomial>;

/// A collection of subcollections of 1-forms.  The shape constraints
/// (sizes d - k_i + 1 with sum k_i = d = dim X) depend on the variety the
/// collection is paired with and are checked at the point of use.
struct OneFormCollection {
  Ring ring;
  std::vector<std::vector<OneForm>> subcollections;

  OneFormCollection(Ring r, std::vector<std::vector<OneForm>> subs);
  /// Sizes of the subcollections, in order.
  std::vector<int> sizes() const;
};

/// Row i is the differential of components[i]: entry (i, j) is the partial
/// derivative of the i-th component by the j-th variable.
PolyMatrix jacobian_rows(const Ring& ring, const std::vector<Polynomial>& components);
PolyMatrix jacobian_matrix(const MapGerm& m);

/// Ideal generated by all t-by-t minors of M.  Throws std::invalid_argument
/// when t is not between 1 and min(rows, cols).
Submodule minors_of_order(const PolyMatrix& m, int t);

/// Determinant of the stacked Jacobian of (phi, f).  The stack must be
/// square: phi and f together need exactly n components.
Polynomial delta_determinant(const MapGerm& phi, const MapGerm& f);

/// The n+1 maximal minors of the stacked Jacobian of (phi, f, Delta), signed
/// so that beta_{n+1} equals Delta itself and sum_i beta_i * (row i of the
/// stack) vanishes identically.  Returned in row order, Delta last.
std::vector<Polynomial> beta_generators(const MapGerm& phi, const MapGerm& f);

/// Deterministic 64-bit generator (splitmix64).  Streams are identical on
/// every platform for a given seed, which std:: distributions do not
/// guarantee.
class DetRng {
public:
  explicit DetRng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  /// Uniform value in [lo, hi], both ends included.
  long int_in(long lo, long hi);

private:
  uint64_t state_;
};

/// Collection of random linear 1-forms with integer coefficients in
/// [-17, 17]; sizes[i] forms in subcollection i.  Forms within a
/// subcollection are redrawn until linearly independent, so sizes[i] may not
/// exceed the number of variables.
OneFormCollection random_linear_collection(const Ring& ring, const std::vector<int>& sizes,
                                           DetRng& rng);
OneFormCollection random_linear_collection(const Ring& ring, const std::vector<int>& sizes,
                                           uint64_t seed);

/// Suspension of a function germ on X by h(w_1..w_t): the same equations in
/// the extended ring together with F = f + h.
struct Suspension {
  Ring ring;              // X's variables followed by the new ones
  VarietyGerm variety;    // X re-read in the extended ring
  Polynomial function;    // F = f + h
  Polynomial h;           // the suspending summand, in the extended ring
};

/// Builds the suspension.  `new_names` must be fresh (no clash with X's
/// variables or each other); `h_text` is parsed in the extended ring and may
/// involve only the new variables.  With no new variables h_text must be
/// "0" and the input germ is returned unchanged.
Suspension suspension_build(const VarietyGerm& x, const Polynomial& f,
                            const std::vector<std::string>& new_names,
                            const std::string& h_text);

}  // namespace germ
