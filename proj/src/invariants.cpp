#include "germcalc/invariants.hpp"

#include <cstdio>
#include <stdexcept>

namespace germ {

namespace {

const MonomialOrdering kLocal = MonomialOrdering::local();
const MonomialOrdering kLocalTop = MonomialOrdering::local(ModuleExtension::TermOverPosition);

void require_ring(const Ring& r, const Polynomial& p, const char* what) {
  if (*p.ring() != *r) throw std::invalid_argument(std::string(what) + ": mixed rings");
}

std::optional<long> to_opt(const Colength& c) {
  if (!c.is_finite()) return std::nullopt;
  return c.value();
}

std::string opt_str(const std::optional<long>& v) {
  return v ? std::to_string(*v) : std::string("INFINITE");
}

OneForm differential(const Polynomial& p) {
  OneForm w;
  const int n = p.nvars();
  w.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w.push_back(p.derivative(i));
  return w;
}

/// Colength of df(Theta) (+ I_X when relative) with the tangent fields
/// already at hand.
Colength br_of(const Polynomial& f, const VarietyGerm& x, const TangentModule& theta,
               bool relative, const ComputeLimits& lim) {
  std::vector<Polynomial> gens = df_of_theta(f, theta).ideal_gens();
  if (relative) gens.insert(gens.end(), x.generators.begin(), x.generators.end());
  return colength(Submodule::ideal(x.ring, std::move(gens)), kLocal, lim);
}

Polynomial random_linear_function(const Ring& ring, DetRng& rng) {
  const int n = ring->nvars();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Polynomial l(ring);
    for (int i = 0; i < n; ++i) {
      const long c = rng.int_in(-17, 17);
      if (c != 0) l += Polynomial::variable(ring, i).scaled(Rational(c));
    }
    if (!l.is_zero()) return l;
  }
  throw std::logic_error("cannot draw a nonzero linear function");
}

/// Certified generic value of the relative BR number of a linear function.
long certified_generic_br(const VarietyGerm& x, const TangentModule& theta, uint64_t seed,
                          int trials, const ComputeLimits& lim) {
  if (trials < 2) throw std::invalid_argument("certification needs at least two trials");
  DetRng rng(seed);
  std::optional<long> agreed;
  for (int t = 0; t < trials; ++t) {
    const Polynomial l = random_linear_function(x.ring, rng);
    const Colength v = br_of(l, x, theta, true, lim);
    if (!v.is_finite())
      throw CertificationError("generic linear function has infinite relative BR number");
    if (agreed && *agreed != v.value())
      throw CertificationError("relative BR number of random linear functions disagrees: " +
                               std::to_string(*agreed) + " vs " + std::to_string(v.value()));
    agreed = v.value();
  }
  return *agreed;
}

IdentityCheck make_check(std::string id, std::string statement, std::optional<long> left,
                         std::optional<long> right, std::vector<std::string> assumptions) {
  IdentityCheck c;
  c.identity = std::move(id);
  c.statement = std::move(statement);
  c.left = left;
  c.right = right;
  c.holds = left == right;
  c.assumptions = std::move(assumptions);
  return c;
}

}  // namespace

std::string inputs_digest(const std::vector<std::string>& parts) {
  uint64_t h = 1469598103934665603ULL;
  for (const std::string& part : parts) {
    for (unsigned char b : part) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    h ^= 0x1f;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Colength milnor_hypersurface(const Polynomial& f, const ComputeLimits& lim) {
  if (!f.vanishes_at_origin())
    throw std::invalid_argument("milnor number: f does not vanish at the origin");
  std::vector<Polynomial> gens;
  for (int i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
  return colength(Submodule::ideal(f.ring(), std::move(gens)), kLocal, lim);
}

Colength le_greuel_colength(const MapGerm& phi, const Polynomial& g, const ComputeLimits& lim) {
  require_ring(phi.ring, g, "Le-Greuel colength");
  if (!g.vanishes_at_origin())
    throw std::invalid_argument("Le-Greuel colength: g does not vanish at the origin");
  const int n = phi.ring->nvars();
  const int k = phi.target_dim();
  if (k + 1 > n) throw std::invalid_argument("Le-Greuel colength: more equations than variables");

  std::vector<Polynomial> stack = phi.components;
  stack.push_back(g);
  std::vector<Polynomial> gens = phi.components;
  for (Polynomial& m : minors_of_order(jacobian_rows(phi.ring, stack), k + 1).ideal_gens())
    gens.push_back(std::move(m));
  return colength(Submodule::ideal(phi.ring, std::move(gens)), kLocal, lim);
}

Colength milnor_restricted(const VarietyGerm& x, const Polynomial& f, const ComputeLimits& lim) {
  return le_greuel_colength(MapGerm(x.ring, x.generators), f, lim);
}

Colength tjurina_icis(const VarietyGerm& x, const ComputeLimits& lim) {
  const int n = x.ambient_dim();
  const int k = x.codim();
  if (k == 0) return Colength::finite(0);

  std::vector<TermVector> gens;
  for (int i = 0; i < n; ++i) {
    TermVector col(x.ring, k);
    for (int l = 0; l < k; ++l) col[l] = x.generators[static_cast<size_t>(l)].derivative(i);
    gens.push_back(std::move(col));
  }
  for (int l = 0; l < k; ++l)
    for (int j = 0; j < k; ++j) {
      TermVector col(x.ring, k);
      col[j] = x.generators[static_cast<size_t>(l)];
      gens.push_back(std::move(col));
    }
  return colength(Submodule(x.ring, k, std::move(gens)), kLocalTop, lim);
}

Colength bruce_roberts(const Polynomial& f, const VarietyGerm& x, bool relative,
                       const ComputeLimits& lim) {
  require_ring(x.ring, f, "Bruce-Roberts number");
  const TangentModule theta = tangent_module(x, lim);
  return br_of(f, x, theta, relative, lim);
}

Colength br_minus_via_formula(const VarietyGerm& x, const Polynomial& f,
                              const ComputeLimits& lim) {
  const Colength lg = le_greuel_colength(MapGerm(x.ring, x.generators), f, lim);
  const Colength tau = tjurina_icis(x, lim);
  if (!lg.is_finite() || !tau.is_finite()) return Colength::infinite();
  return Colength::finite(lg.value() - tau.value());
}

Colength chern_index(const VarietyGerm& x, const OneFormCollection& c,
                     const ComputeLimits& lim) {
  if (*x.ring != *c.ring) throw std::invalid_argument("index: mixed rings");
  const int d = x.dim();
  if (d < 1) throw std::invalid_argument("index: variety dimension must be positive");
  if (c.subcollections.empty()) throw std::invalid_argument("index: empty collection");

  int sum_k = 0;
  for (int s : c.sizes()) {
    const int ki = d + 1 - s;
    if (s < 1 || ki < 1)
      throw std::invalid_argument("index: subcollection size does not fit the dimension");
    sum_k += ki;
  }
  if (sum_k != d)
    throw std::invalid_argument("index: subcollection sizes do not fit the dimension");

  const PolyMatrix dphi = jacobian_rows(x.ring, x.generators);
  std::vector<Polynomial> gens = x.generators;
  for (const auto& sub : c.subcollections) {
    std::vector<std::vector<Polynomial>> rows;
    for (int l = 0; l < dphi.rows(); ++l) {
      std::vector<Polynomial> row;
      for (int j = 0; j < dphi.cols(); ++j) row.push_back(dphi.at(l, j));
      rows.push_back(std::move(row));
    }
    for (const OneForm& w : sub) rows.push_back(w);
    PolyMatrix stacked = PolyMatrix::from_rows(x.ring, std::move(rows));
    for (Polynomial& m : minors_of_order(stacked, stacked.rows()).ideal_gens())
      gens.push_back(std::move(m));
  }
  return colength(Submodule::ideal(x.ring, std::move(gens)), kLocal, lim);
}

GenericCertificate certify_generic(const VarietyGerm& x, const std::vector<int>& sizes,
                                   uint64_t seed, int trials, const ComputeLimits& lim) {
  if (trials < 2) throw std::invalid_argument("certification needs at least two trials");
  DetRng rng(seed);
  std::optional<long> agreed;
  std::optional<OneFormCollection> last;
  for (int t = 0; t < trials; ++t) {
    OneFormCollection coll = random_linear_collection(x.ring, sizes, rng);
    const Colength ind = chern_index(x, coll, lim);
    if (!ind.is_finite())
      throw CertificationError("random linear collection has infinite index");
    if (agreed && *agreed != ind.value())
      throw CertificationError("index of random linear collections disagrees: " +
                               std::to_string(*agreed) + " vs " + std::to_string(ind.value()));
    agreed = ind.value();
    last = std::move(coll);
  }
  return GenericCertificate{std::move(*last), *agreed, trials};
}

Colength chern_number(const VarietyGerm& x, const OneFormCollection& c, uint64_t seed,
                      int trials, const ComputeLimits& lim) {
  const Colength ind = chern_index(x, c, lim);
  if (!ind.is_finite()) return Colength::infinite();
  const GenericCertificate cert = certify_generic(x, c.sizes(), seed, trials, lim);
  return Colength::finite(ind.value() - cert.index);
}

Colength chern_df1_via_br(const VarietyGerm& x, const Polynomial& f1, const Polynomial& f2,
                          uint64_t seed, int trials, const ComputeLimits& lim) {
  require_ring(x.ring, f1, "slice Chern number");
  require_ring(x.ring, f2, "slice Chern number");
  std::vector<Polynomial> gens = x.generators;
  gens.push_back(f2);
  const VarietyGerm slice(x.ring, std::move(gens), x.icis_claimed);
  const TangentModule theta = tangent_module(slice, lim);

  const Colength v = br_of(f1, slice, theta, true, lim);
  if (!v.is_finite()) return Colength::infinite();
  const long generic = certified_generic_br(slice, theta, seed, trials, lim);
  return Colength::finite(v.value() - generic);
}

InvariantReport euler_obstruction_function(const VarietyGerm& x, const Polynomial& f1,
                                           const Polynomial& f2, uint64_t seed, int trials,
                                           const ComputeLimits& lim) {
  std::vector<Polynomial> gens = x.generators;
  gens.push_back(f2);
  const VarietyGerm slice(x.ring, std::move(gens), x.icis_claimed);
  const OneFormCollection df1(x.ring, {{differential(f1)}});
  const Colength value = chern_number(slice, df1, seed, trials, lim);

  std::vector<std::string> digest_parts;
  for (const Polynomial& g : x.generators) digest_parts.push_back(g.str());
  digest_parts.push_back(f1.str());
  digest_parts.push_back(f2.str());
  digest_parts.push_back(std::to_string(seed));

  InvariantReport rep;
  rep.name = "euler-obstruction-of-function";
  rep.value = value;
  rep.route = "Chern number of {df1} on the slice by f2, via maximal minors and a "
              "certified generic linear collection";
  rep.inputs_digest = inputs_digest(digest_parts);
  rep.assumptions = {
      "f1 is tractable with respect to a good stratification of the slice (assumed)",
      "the slice by f2 is an isolated complete intersection (assumed)",
      "value is the unsigned colength difference; the topological obstruction "
      "carries an extra sign (-1)^(dim-1)",
  };
  return rep;
}

Colength cusps_count(const VarietyGerm& x, const MapGerm& f, const ComputeLimits& lim) {
  if (*x.ring != *f.ring) throw std::invalid_argument("cusp count: mixed rings");
  if (f.target_dim() != 2)
    throw std::invalid_argument("cusp count: the map needs exactly two components");
  if (x.codim() + 2 != x.ambient_dim())
    throw std::invalid_argument("cusp count: equations plus map must fill the dimension");

  const MapGerm equations(x.ring, x.generators);
  std::vector<Polynomial> gens = x.generators;
  for (Polynomial& b : beta_generators(equations, f)) gens.push_back(std::move(b));
  return colength(Submodule::ideal(x.ring, std::move(gens)), kLocal, lim);
}

std::vector<IdentityCheck> identity_report(const VarietyGerm& x, const MapGerm& f,
                                           uint64_t seed, int trials,
                                           const ComputeLimits& lim) {
  if (*x.ring != *f.ring) throw std::invalid_argument("identity report: mixed rings");
  if (f.target_dim() != 2)
    throw std::invalid_argument("identity report: the map needs exactly two components");
  if (x.codim() + 2 != x.ambient_dim())
    throw std::invalid_argument("identity report: equations plus map must fill the dimension");

  const Ring& r = x.ring;
  const Polynomial& f1 = f.components[0];
  const Polynomial& f2 = f.components[1];
  const MapGerm equations(r, x.generators);
  const Polynomial delta = delta_determinant(equations, f);

  const OneForm df1 = differential(f1);
  const OneForm df2 = differential(f2);
  const OneForm dd = differential(delta);
  const OneFormCollection w1(r, {{df1, df2}, {df1, dd}});
  const OneFormCollection w2(r, {{df1, df2}, {df2, dd}});

  const std::optional<long> ind1 = to_opt(chern_index(x, w1, lim));
  const std::optional<long> ind2 = to_opt(chern_index(x, w2, lim));
  const std::optional<long> c = to_opt(cusps_count(x, f, lim));
  const std::optional<long> m1 = to_opt(milnor_restricted(x, f1, lim));
  const std::optional<long> m2 = to_opt(milnor_restricted(x, f2, lim));
  const GenericCertificate cert = certify_generic(x, w1.sizes(), seed, trials, lim);

  const auto add = [](std::optional<long> a, std::optional<long> b) -> std::optional<long> {
    if (!a || !b) return std::nullopt;
    return *a + *b;
  };
  const auto sub = [](std::optional<long> a, std::optional<long> b) -> std::optional<long> {
    if (!a || !b) return std::nullopt;
    return *a - *b;
  };
  const std::optional<long> ch1 = sub(ind1, cert.index);
  const std::optional<long> ch2 = sub(ind2, cert.index);

  const std::vector<std::string> base = {
      "X is an isolated complete intersection (assumed)",
      "f is finitely determined on X (assumed)",
      "random linear draws at seed " + std::to_string(seed) +
          " certified generic by cross-trial agreement",
  };
  auto with = [&base](std::initializer_list<const char*> extra) {
    std::vector<std::string> out = base;
    for (const char* e : extra) out.emplace_back(e);
    return out;
  };

  std::vector<IdentityCheck> checks;
  checks.push_back(make_check(
      "index-cusp-milnor-f1",
      "ind(W1) = c(f|X) + mu(f1|X); W1 = {{df1,df2},{df1,dDelta}}",
      ind1, add(c, m1), base));
  checks.push_back(make_check(
      "index-cusp-milnor-f2",
      "ind(W2) = c(f|X) + mu(f2|X); W2 = {{df1,df2},{df2,dDelta}}",
      ind2, add(c, m2), base));
  checks.push_back(make_check(
      "chern-via-cusps-f1", "Ch(W1) = c(f|X) + mu(f1|X) - ind(generic)",
      ch1, sub(add(c, m1), cert.index), base));
  checks.push_back(make_check(
      "chern-via-cusps-f2", "Ch(W2) = c(f|X) + mu(f2|X) - ind(generic)",
      ch2, sub(add(c, m2), cert.index), base));
  checks.push_back(make_check(
      "chern-difference", "Ch(W1) - Ch(W2) = mu(f1|X) - mu(f2|X)",
      sub(ch1, ch2), sub(m1, m2), base));

  // Slice checks; every term below lives on X cap fi^{-1}(0).
  std::vector<Polynomial> g2 = x.generators;
  g2.push_back(f2);
  const VarietyGerm y2(r, std::move(g2), x.icis_claimed);
  std::vector<Polynomial> g1 = x.generators;
  g1.push_back(f1);
  const VarietyGerm y1(r, std::move(g1), x.icis_claimed);

  const std::optional<long> slice_minors =
      to_opt(chern_number(y2, OneFormCollection(r, {{df1}}), seed, trials, lim));
  const std::optional<long> slice_br = to_opt(chern_df1_via_br(x, f1, f2, seed, trials, lim));
  checks.push_back(make_check(
      "slice-chern-dual-route",
      "Ch_{Y2}{df1} by minors = muBR-(f1,Y2) - muBR-(L,Y2); Y2 = X cap f2^{-1}(0)",
      slice_minors, slice_br,
      with({"X cap f2^{-1}(0) and the double slice are isolated complete "
            "intersections (assumed)"})));

  const std::optional<long> slice_minors_21 =
      to_opt(chern_number(y1, OneFormCollection(r, {{df2}}), seed, trials, lim));
  const TangentModule theta2 = tangent_module(y2, lim);
  const TangentModule theta1 = tangent_module(y1, lim);
  const std::optional<long> br_l2 = certified_generic_br(y2, theta2, seed, trials, lim);
  const std::optional<long> br_l1 = certified_generic_br(y1, theta1, seed, trials, lim);
  const std::optional<long> tau2 = to_opt(tjurina_icis(y2, lim));
  const std::optional<long> tau1 = to_opt(tjurina_icis(y1, lim));
  std::optional<long> rhs = sub(slice_minors, slice_minors_21);
  rhs = add(rhs, sub(br_l2, br_l1));
  rhs = add(rhs, sub(tau2, tau1));
  checks.push_back(make_check(
      "slice-decomposition",
      "Ch(W2) - Ch(W1) = Ch_{Y2}{df1} - Ch_{Y1}{df2} + muBR-(L,Y2) - muBR-(L,Y1) "
      "+ tau(Y2) - tau(Y1); Yi = X cap fi^{-1}(0)",
      sub(ch2, ch1), rhs,
      with({"both slices are isolated complete intersections (assumed)",
            "left side written as Ch(W2) - Ch(W1); the transposed orientation is "
            "inconsistent with the constituent identities"})));
  return checks;
}

IdentityCheck suspension_check(const VarietyGerm& x, const Polynomial& f,
                               const std::vector<std::string>& new_names,
                               const std::string& h_text, const ComputeLimits& lim) {
  const Suspension s = suspension_build(x, f, new_names, h_text);
  const Colength base = bruce_roberts(f, x, true, lim);

  std::optional<long> mu_h = 1;
  std::optional<long> left = to_opt(base);
  if (!new_names.empty()) {
    Ring hring = make_ring(new_names);
    mu_h = to_opt(milnor_hypersurface(parse_polynomial(h_text, hring), lim));
    left = to_opt(bruce_roberts(s.function, s.variety, true, lim));
  }
  std::optional<long> right;
  if (mu_h && base.is_finite()) right = *mu_h * base.value();

  IdentityCheck c = make_check(
      "suspension-multiplicativity",
      "muBR-(f+h, suspended X) = mu(h) * muBR-(f, X)", left, right,
      {"mu(h) and muBR-(f, X) finite for the identity to be informative",
       "h involves only the new variables (checked)"});
  return c;
}

}  // namespace germ
