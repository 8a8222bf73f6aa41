#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germcalc/logarithmic.hpp"

using namespace germ;

namespace {

Polynomial pp(const char* text, const Ring& r) { return parse_polynomial(text, r); }

std::vector<Polynomial> polys(const Ring& r, const std::vector<const char*>& texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(pp(t, r));
  return out;
}

const MonomialOrdering kTop = MonomialOrdering::local(ModuleExtension::TermOverPosition);

/// Vector field from component texts.
TermVector field(const Ring& r, const std::vector<const char*>& texts) {
  std::vector<Polynomial> comps;
  for (const char* t : texts) comps.push_back(pp(t, r));
  return TermVector(std::move(comps));
}

bool tangent_to(const TangentModule& theta, const VarietyGerm& x) {
  StandardBasisResult ix = standard_basis(Submodule::ideal(x.ring, x.generators),
                                          MonomialOrdering::local());
  std::vector<Polynomial> basis;
  for (const TermVector& g : ix.basis) basis.push_back(g[0]);
  for (const TermVector& delta : theta.generators)
    for (const Polynomial& h : x.generators) {
      Polynomial pairing(x.ring);
      for (int i = 0; i < x.ambient_dim(); ++i) pairing += delta[i] * h.derivative(i);
      if (!normal_form(pairing, basis, MonomialOrdering::local()).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("tangent fields of the ambient germ") {
  Ring r = make_ring({"x", "y", "z"});
  TangentModule theta = tangent_module(VarietyGerm(r, {}));
  REQUIRE(theta.generators.size() == 3);
  std::vector<TermVector> units;
  for (int i = 0; i < 3; ++i) units.push_back(TermVector::unit(r, 3, i));
  CHECK(module_equality(theta.as_submodule(), Submodule(r, 3, units), kTop));
}

TEST_CASE("tangent fields of a smooth hypersurface") {
  Ring r = make_ring({"x", "y"});
  TangentModule theta = tangent_module(VarietyGerm(r, polys(r, {"x"})));
  Submodule expected(r, 2, {field(r, {"x", "0"}), field(r, {"0", "1"})});
  CHECK(module_equality(theta.as_submodule(), expected, kTop));
}

TEST_CASE("tangent fields of the crossing curve") {
  Ring r = make_ring({"x", "y"});
  TangentModule theta = tangent_module(VarietyGerm(r, polys(r, {"x*y"})));
  Submodule expected(r, 2, {field(r, {"x", "0"}), field(r, {"0", "y"})});
  CHECK(module_equality(theta.as_submodule(), expected, kTop));
}

TEST_CASE("tangency holds for every computed generator") {
  Ring r3 = make_ring({"x", "y", "z"});
  const std::vector<std::vector<const char*>> varieties = {
      {"x^2 + y^3"},
      {"x^2 + y^2 + z^2"},
      {"x*y", "x*z"},
      {"x^2 + y^3 + z^5"},
  };
  for (const auto& gens : varieties) {
    VarietyGerm x(r3, polys(r3, gens), true);
    TangentModule theta = tangent_module(x);
    CHECK(tangent_to(theta, x));
  }
}

TEST_CASE("equation multiples of coordinate fields are tangent") {
  Ring r = make_ring({"x", "y", "z"});
  VarietyGerm x(r, polys(r, {"x*z - y^2"}));
  TangentModule theta = tangent_module(x);
  for (int i = 0; i < 3; ++i) {
    TermVector v = TermVector::unit(r, 3, i).scaled(x.generators[0]);
    CHECK(module_membership(v, theta.as_submodule(), kTop));
  }
}

TEST_CASE("pairing the differential with the tangent fields") {
  Ring r = make_ring({"x", "y"});

  TangentModule crossing = tangent_module(VarietyGerm(r, polys(r, {"x*y"})));
  CHECK(module_equality(df_of_theta(pp("x + y", r), crossing),
                        Submodule::ideal(r, polys(r, {"x", "y"})),
                        MonomialOrdering::local()));

  TangentModule line = tangent_module(VarietyGerm(r, polys(r, {"x"})));
  CHECK(module_equality(df_of_theta(pp("x^2 + y^2", r), line),
                        Submodule::ideal(r, polys(r, {"2*x^2", "2*y"})),
                        MonomialOrdering::local()));

  Ring other = make_ring({"t"});
  CHECK_THROWS_AS(df_of_theta(pp("t", other), line), std::invalid_argument);
}

TEST_CASE("characteristic ideal of a line in the plane") {
  Ring r = make_ring({"x"});
  VarietyGerm x(r, polys(r, {"x"}));
  LcvMinusIdeal l = lcv_minus_ideal(x, tangent_module(x));
  CHECK(l.cotangent_ring->names() == std::vector<std::string>{"x", "p1"});
  CHECK(module_equality(Submodule::ideal(l.cotangent_ring, l.generators),
                        Submodule::ideal(l.cotangent_ring, polys(l.cotangent_ring, {"x"})),
                        MonomialOrdering::local()));
}

TEST_CASE("conjugate variable names avoid collisions") {
  Ring r = make_ring({"p1", "y"});
  VarietyGerm x(r, polys(r, {"p1"}));
  LcvMinusIdeal l = lcv_minus_ideal(x, tangent_module(x));
  CHECK(l.cotangent_ring->names() == std::vector<std::string>{"p1", "y", "p1_", "p2"});
}

TEST_CASE("characteristic ideal does not depend on the generating fields") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm x(r, polys(r, {"x*y"}));
  TangentModule theta = tangent_module(x);

  // pad with redundant combinations of the computed fields
  TangentModule padded = theta;
  REQUIRE(theta.generators.size() >= 2);
  padded.generators.push_back(theta.generators[0] + theta.generators[1]);
  padded.generators.push_back(theta.generators[0].scaled(pp("1 + x", r)));

  LcvMinusIdeal a = lcv_minus_ideal(x, theta);
  LcvMinusIdeal b = lcv_minus_ideal(x, padded);
  CHECK(module_equality(Submodule::ideal(a.cotangent_ring, a.generators),
                        Submodule::ideal(b.cotangent_ring, b.generators),
                        MonomialOrdering::local()));
}

TEST_CASE("suspended varieties keep their tangent fields") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm x(r, polys(r, {"x*y"}));
  Suspension s = suspension_build(x, pp("x + y", r), {"w"}, "w^2");

  TangentModule base = tangent_module(x);
  TangentModule lifted = tangent_module(s.variety);
  std::vector<int> var_map = {0, 1};

  for (const TermVector& delta : base.generators) {
    TermVector ext(s.ring, 3);
    for (int i = 0; i < 2; ++i) ext[i] = delta[i].in_ring(s.ring, var_map);
    CHECK(module_membership(ext, lifted.as_submodule(), kTop));
  }
  CHECK(module_membership(TermVector::unit(s.ring, 3, 2), lifted.as_submodule(), kTop));
}

TEST_CASE("dimension and depth of small characteristic ideals") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm x(r, polys(r, {"x"}));
  LcvMinusIdeal l = lcv_minus_ideal(x, tangent_module(x));
  CohenMacaulayReport rep = cohen_macaulay_report(l);
  CHECK(rep.dim == 2);
  CHECK(rep.depth == 2);
  CHECK(rep.is_cm);
}

TEST_CASE("crossing curve characteristic variety is Cohen-Macaulay") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm x(r, polys(r, {"x*y"}));
  CohenMacaulayReport rep = cohen_macaulay_report(lcv_minus_ideal(x, tangent_module(x)));
  CHECK(rep.dim == rep.depth);
  CHECK(rep.is_cm);
}
