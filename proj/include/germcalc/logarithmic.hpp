#pragma once

#include "germcalc/engine.hpp"
#include "germcalc/germs.hpp"

namespace germ {

/// Generators of the module of vector fields tangent to X: each generator is
/// a rank-n vector of coefficients, one per coordinate field.
struct TangentModule {
  Ring ring;
  std::vector<TermVector> generators;

  Submodule as_submodule() const;
};

/// Vector fields xi with dh(xi) in the ideal of X for every defining
/// equation h.  Computed as the first-block projection of the syzygies of
/// the Jacobian columns alongside the I_X-multiples of the unit vectors.
/// The ambient germ (no equations) gives all coordinate fields.
TangentModule tangent_module(const VarietyGerm& x, const ComputeLimits& lim = {});

/// Ideal df(Theta) generated by the pairings of df with each tangent field.
Submodule df_of_theta(const Polynomial& f, const TangentModule& theta);

/// Defining ideal of the relative logarithmic characteristic variety inside
/// the cotangent space: the symbols sum_i delta_i p_i of the tangent fields
/// together with the equations of X.
struct LcvMinusIdeal {
  Ring cotangent_ring;  // the x-variables followed by their conjugate p's
  std::vector<Polynomial> generators;
};

LcvMinusIdeal lcv_minus_ideal(const VarietyGerm& x, const TangentModule& theta);

struct CohenMacaulayReport {
  int dim = 0;
  int depth = 0;
  bool is_cm = false;
};

/// Krull dimension and depth of the quotient by the ideal, at the origin of
/// the cotangent space; Cohen-Macaulay when the two agree.
CohenMacaulayReport cohen_macaulay_report(const LcvMinusIdeal& l, const ComputeLimits& lim = {});

}  // namespace germ
