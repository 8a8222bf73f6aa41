#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germcalc/invariants.hpp"
#include "support/macaulay_oracle.hpp"
#include "support/test_rng.hpp"

using namespace germ;
using germ::testing::macaulay_colength;
using germ::testing::TestRng;

namespace {

Polynomial pp(const char* text, const Ring& r) { return parse_polynomial(text, r); }

std::vector<Polynomial> polys(const Ring& r, const std::vector<const char*>& texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(pp(t, r));
  return out;
}

OneForm differential_of(const Polynomial& p) {
  OneForm w;
  for (int i = 0; i < p.nvars(); ++i) w.push_back(p.derivative(i));
  return w;
}

/// The surface germ and map used across several checks below: an isolated
/// hypersurface in three variables paired with two plane coordinates.
struct SurfacePair {
  Ring r = make_ring({"x", "y", "z"});
  VarietyGerm x{r, polys(r, {"x^3 + x^2*y^2 + y^7 + z^2"}), true};
  Polynomial f1 = pp("y + z^2", r);
  Polynomial f2 = pp("x^2 + x*y + y^2", r);
};

}  // namespace

TEST_CASE("isolated hypersurface Milnor numbers") {
  Ring r3 = make_ring({"x", "y", "z"});
  Ring r2 = make_ring({"x", "y"});
  CHECK(milnor_hypersurface(pp("x^2 + y^2 + z^2", r3)) == Colength::finite(1));
  CHECK(milnor_hypersurface(pp("x^3 + y^3", r2)) == Colength::finite(4));
  CHECK(milnor_hypersurface(pp("x^2*y", r2)) == Colength::infinite());
  CHECK_THROWS_AS(milnor_hypersurface(pp("x + 1", r2)), std::invalid_argument);
}

TEST_CASE("colength of an equation with a slice function") {
  Ring r = make_ring({"x", "y", "z"});
  MapGerm phi(r, polys(r, {"x^2 + y^2 + z^2"}));
  CHECK(le_greuel_colength(phi, pp("x", r)) == Colength::finite(2));

  // no equations: plain Milnor number
  Ring r2 = make_ring({"x", "y"});
  Polynomial f = pp("x^3 + y^3", r2);
  CHECK(le_greuel_colength(MapGerm(r2, {}), f) == milnor_hypersurface(f));

  CHECK_THROWS_AS(le_greuel_colength(phi, pp("x - 1", r)), std::invalid_argument);
}

TEST_CASE("restricted Milnor numbers of the surface pair") {
  SurfacePair s;
  CHECK(milnor_restricted(s.x, s.f1) == Colength::finite(13));
  CHECK(milnor_restricted(s.x, s.f2) == Colength::finite(18));

  // independent truncation oracle on the same ideals
  for (int which = 0; which < 2; ++which) {
    const Polynomial& f = which == 0 ? s.f1 : s.f2;
    std::vector<Polynomial> stack = s.x.generators;
    stack.push_back(f);
    std::vector<Polynomial> gens = s.x.generators;
    for (const Polynomial& m : minors_of_order(jacobian_rows(s.r, stack), 2).ideal_gens())
      gens.push_back(m);
    CHECK(macaulay_colength(gens) == (which == 0 ? 13 : 18));
  }

  // ambient germ: reduces to the hypersurface count
  Ring r2 = make_ring({"x", "y"});
  CHECK(milnor_restricted(VarietyGerm(r2, {}), pp("x^3 + y^3", r2)) == Colength::finite(4));
}

TEST_CASE("complete intersection Tjurina numbers") {
  Ring r2 = make_ring({"x", "y"});
  Ring r3 = make_ring({"x", "y", "z"});
  CHECK(tjurina_icis(VarietyGerm(r2, polys(r2, {"x^2 + y^3"}))) == Colength::finite(2));
  CHECK(tjurina_icis(VarietyGerm(r3, polys(r3, {"x^2 + y^2 + z^2"}))) == Colength::finite(1));
  CHECK(tjurina_icis(VarietyGerm(r2, {})) == Colength::finite(0));
}

TEST_CASE("quasi-homogeneous germs have equal Milnor and Tjurina numbers") {
  Ring r = make_ring({"x", "y"});
  for (const char* t : {"x^2 + y^3", "x^2 + y^5", "x^3 + y^4"}) {
    Polynomial f = pp(t, r);
    CHECK(milnor_hypersurface(f) == tjurina_icis(VarietyGerm(r, {f})));
  }
}

TEST_CASE("Bruce-Roberts numbers of small germs") {
  Ring r = make_ring({"x", "y"});
  CHECK(bruce_roberts(pp("x + y", r), VarietyGerm(r, polys(r, {"x*y"})), true) ==
        Colength::finite(1));
  CHECK(bruce_roberts(pp("x^2 + y^2", r), VarietyGerm(r, polys(r, {"x"})), false) ==
        Colength::finite(2));

  // ambient germ: both flavours degenerate to the Milnor number
  Polynomial f = pp("x^3 + y^3", r);
  VarietyGerm ambient(r, {});
  CHECK(bruce_roberts(f, ambient, false) == Colength::finite(4));
  CHECK(bruce_roberts(f, ambient, true) == Colength::finite(4));
}

TEST_CASE("relative Bruce-Roberts number by formula agrees with the fields route") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm x(r, polys(r, {"x^2 + y^3"}), true);
  Polynomial f = pp("y", r);
  Colength direct = bruce_roberts(f, x, true);
  CHECK(direct == br_minus_via_formula(x, f));
  CHECK(direct.is_finite());

  // smooth germ: formula collapses to the Milnor number
  VarietyGerm ambient(r, {});
  CHECK(br_minus_via_formula(ambient, pp("x^2 + y^2", r)) == Colength::finite(1));
}

TEST_CASE("index of a 1-form collection") {
  Ring r1 = make_ring({"x"});
  OneForm xdx = {pp("x", r1)};
  CHECK(chern_index(VarietyGerm(r1, {}), OneFormCollection(r1, {{xdx}})) ==
        Colength::finite(1));

  // the explicit linear collection on the surface pair
  SurfacePair s;
  OneFormCollection l(s.r, {{differential_of(pp("x + y", s.r)),
                             differential_of(pp("x - y + 3*z", s.r))},
                            {differential_of(pp("x + y - z", s.r)),
                             differential_of(pp("x - y + 5*z", s.r))}});
  CHECK(chern_index(s.x, l) == Colength::finite(13));

  // a cusp map collection on the smooth plane
  Ring r2 = make_ring({"x", "y"});
  Polynomial g1 = pp("x", r2), g2 = pp("y^3 + x*y", r2);
  Polynomial delta = delta_determinant(MapGerm(r2, {}), MapGerm(r2, {g1, g2}));
  OneFormCollection w1(r2, {{differential_of(g1), differential_of(g2)},
                            {differential_of(g1), differential_of(delta)}});
  CHECK(chern_index(VarietyGerm(r2, {}), w1) == Colength::finite(1));

  // shape mismatches: the subcollection degrees must add up to the dimension
  CHECK_THROWS_AS(chern_index(VarietyGerm(r2, {}),
                              OneFormCollection(r2, {{differential_of(g1), differential_of(g2)}})),
                  std::invalid_argument);
  OneForm d3 = differential_of(delta);
  CHECK_THROWS_AS(chern_index(VarietyGerm(r2, {}),
                              OneFormCollection(r2, {{differential_of(g1), differential_of(g2),
                                                      d3}})),
                  std::invalid_argument);
}

TEST_CASE("generic linear collections certify to one index") {
  SurfacePair s;
  GenericCertificate a = certify_generic(s.x, {2, 2}, 1);
  CHECK(a.index == 13);
  CHECK(a.trials == 3);
  CHECK(certify_generic(s.x, {2, 2}, 2).index == 13);
  CHECK(certify_generic(s.x, {2, 2}, 3).index == 13);
  CHECK_THROWS_AS(certify_generic(s.x, {2, 2}, 1, 1), std::invalid_argument);
}

TEST_CASE("Chern numbers of the surface pair collections") {
  SurfacePair s;
  MapGerm f(s.r, {s.f1, s.f2});
  Polynomial delta = delta_determinant(MapGerm(s.r, s.x.generators), f);
  OneForm df1 = differential_of(s.f1), df2 = differential_of(s.f2),
          dd = differential_of(delta);

  CHECK(chern_number(s.x, OneFormCollection(s.r, {{df1, df2}, {df1, dd}}), 1) ==
        Colength::finite(9));
  CHECK(chern_number(s.x, OneFormCollection(s.r, {{df1, df2}, {df2, dd}}), 1) ==
        Colength::finite(14));

  // a generic draw measured against certification is exactly neutral
  OneFormCollection generic = random_linear_collection(s.r, {2, 2}, 99);
  CHECK(chern_number(s.x, generic, 5) == Colength::finite(0));
}

TEST_CASE("cusp counts") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm plane(r, {});
  CHECK(cusps_count(plane, MapGerm(r, polys(r, {"x", "y^3 + x*y"}))) == Colength::finite(1));
  CHECK(cusps_count(plane, MapGerm(r, polys(r, {"x", "y^2"}))) == Colength::finite(0));

  SurfacePair s;
  CHECK(cusps_count(s.x, MapGerm(s.r, {s.f1, s.f2})) == Colength::finite(9));

  CHECK_THROWS_AS(cusps_count(plane, MapGerm(r, polys(r, {"x"}))), std::invalid_argument);
  Ring r3 = make_ring({"x", "y", "z"});
  CHECK_THROWS_AS(cusps_count(VarietyGerm(r3, {}), MapGerm(r3, polys(r3, {"x", "y"}))),
                  std::invalid_argument);
}

TEST_CASE("slice Chern number via tangent fields matches the minors route") {
  Ring r = make_ring({"x", "y", "z"});
  VarietyGerm x(r, polys(r, {"x^2 + y^2 + z^2"}), true);
  Polynomial f1 = pp("x", r), f2 = pp("y", r);

  VarietyGerm slice(r, polys(r, {"x^2 + y^2 + z^2", "y"}), true);
  Colength minors_route =
      chern_number(slice, OneFormCollection(r, {{differential_of(f1)}}), 11);
  Colength fields_route = chern_df1_via_br(x, f1, f2, 11);
  CHECK(minors_route == fields_route);
  CHECK(minors_route.is_finite());
}

TEST_CASE("Euler obstruction report carries its hypotheses") {
  Ring r = make_ring({"x", "y"});
  InvariantReport rep =
      euler_obstruction_function(VarietyGerm(r, {}), pp("x^2 + y", r), pp("y", r), 3);
  CHECK(rep.value == Colength::finite(1));
  CHECK(!rep.assumptions.empty());
  CHECK(!rep.route.empty());
  CHECK(rep.inputs_digest.size() == 16);

  InvariantReport same =
      euler_obstruction_function(VarietyGerm(r, {}), pp("x^2 + y", r), pp("y", r), 3);
  CHECK(rep.inputs_digest == same.inputs_digest);
  InvariantReport other =
      euler_obstruction_function(VarietyGerm(r, {}), pp("x^2 + y", r), pp("y", r), 4);
  CHECK(rep.inputs_digest != other.inputs_digest);
}

TEST_CASE("identity report on the plane cusp map") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm plane(r, {});
  MapGerm f(r, polys(r, {"x", "y^3 + x*y"}));
  std::vector<IdentityCheck> checks = identity_report(plane, f, 17);
  REQUIRE(checks.size() == 7);
  for (const IdentityCheck& c : checks) {
    CAPTURE(c.identity);
    CHECK(c.holds);
    CHECK(!c.statement.empty());
    CHECK(!c.assumptions.empty());
  }
}

TEST_CASE("index differences track Milnor differences on random plane maps") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm plane(r, {});
  MapGerm base(r, polys(r, {"x", "y^3 + x*y"}));
  TestRng rng(2027);
  int verified = 0;
  for (int trial = 0; trial < 40 && verified < 10; ++trial) {
    // a random small perturbation of the cusp map
    std::vector<Polynomial> comps;
    for (int c = 0; c < 2; ++c) {
      Polynomial p = base.components[static_cast<size_t>(c)];
      for (int m = 0; m < 2; ++m) {
        unsigned ex = static_cast<unsigned>(rng.range(0, 2));
        unsigned ey = static_cast<unsigned>(rng.range(0, 2));
        if (ex + ey == 0) continue;
        long coeff = rng.range(-2, 2);
        p += Polynomial::term(r, Monomial::from_exponents({ex + 1, ey}),
                              Rational(coeff));
      }
      comps.push_back(p);
    }
    MapGerm f(r, comps);
    Polynomial delta = delta_determinant(MapGerm(r, {}), f);
    OneForm df1 = differential_of(f.components[0]);
    OneForm df2 = differential_of(f.components[1]);
    OneForm dd = differential_of(delta);
    Colength i1 = chern_index(plane, OneFormCollection(r, {{df1, df2}, {df1, dd}}));
    Colength i2 = chern_index(plane, OneFormCollection(r, {{df1, df2}, {df2, dd}}));
    Colength m1 = milnor_hypersurface(f.components[0]);
    Colength m2 = milnor_hypersurface(f.components[1]);
    if (!i1.is_finite() || !i2.is_finite() || !m1.is_finite() || !m2.is_finite()) continue;
    CHECK(i1.value() - i2.value() == m1.value() - m2.value());
    ++verified;
  }
  CHECK(verified >= 10);
}

TEST_CASE("suspension multiplies the relative number by the Milnor number") {
  Ring r = make_ring({"x", "y"});
  VarietyGerm x(r, polys(r, {"x*y"}));
  Polynomial f = pp("x + y", r);

  IdentityCheck sq = suspension_check(x, f, {"w"}, "w^2");
  CHECK(sq.holds);
  CHECK(sq.left == 1);
  CHECK(sq.right == 1);

  IdentityCheck cube = suspension_check(x, f, {"w"}, "w^3");
  CHECK(cube.holds);
  CHECK(cube.left == 2);

  IdentityCheck trivial = suspension_check(x, f, {}, "0");
  CHECK(trivial.holds);
  CHECK(trivial.left == 1);
}

TEST_CASE("adding generators never increases a colength") {
  Ring r = make_ring({"x", "y"});
  TestRng rng(515);
  const MonomialOrdering local = MonomialOrdering::local();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    gens.push_back(Polynomial::variable(r, 0, static_cast<unsigned>(rng.range(1, 3))));
    gens.push_back(Polynomial::variable(r, 1, static_cast<unsigned>(rng.range(1, 3))));
    Colength before = colength(Submodule::ideal(r, gens), local);

    std::vector<Polynomial> more = gens;
    more.push_back(Polynomial::term(r,
                                    Monomial::from_exponents(
                                        {static_cast<unsigned>(rng.range(0, 2)),
                                         static_cast<unsigned>(rng.range(0, 2))}),
                                    Rational(rng.range(1, 3))));
    Colength after = colength(Submodule::ideal(r, more), local);
    REQUIRE(before.is_finite());
    REQUIRE(after.is_finite());
    CHECK(after.value() <= before.value());
  }
}
