#include "germcalc/logarithmic.hpp"

#include <set>
#include <stdexcept>

namespace germ {

Submodule TangentModule::as_submodule() const {
  return Submodule(ring, ring->nvars(), generators);
}

TangentModule tangent_module(const VarietyGerm& x, const ComputeLimits& lim) {
  const Ring& r = x.ring;
  const int n = r->nvars();
  const int k = x.codim();

  if (k == 0) {
    std::vector<TermVector> fields;
    fields.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) fields.push_back(TermVector::unit(r, n, i));
    return TangentModule{r, std::move(fields)};
  }

  // Columns of the relation problem, in O^k: the i-th partial of every
  // equation, then each equation times each unit vector.
  std::vector<TermVector> cols;
  cols.reserve(static_cast<size_t>(n + k * k));
  for (int i = 0; i < n; ++i) {
    TermVector c(r, k);
    for (int l = 0; l < k; ++l) c[l] = x.generators[static_cast<size_t>(l)].derivative(i);
    cols.push_back(std::move(c));
  }
  for (int l = 0; l < k; ++l)
    for (int j = 0; j < k; ++j) {
      TermVector c(r, k);
      c[j] = x.generators[static_cast<size_t>(l)];
      cols.push_back(std::move(c));
    }

  Submodule syz = syzygy_module(cols, MonomialOrdering::local(ModuleExtension::TermOverPosition), lim);

  std::vector<TermVector> fields;
  for (const TermVector& s : syz.gens) {
    TermVector field(r, n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      field[i] = s[i];
      nonzero = nonzero || !s[i].is_zero();
    }
    if (nonzero) fields.push_back(std::move(field));
  }
  return TangentModule{r, std::move(fields)};
}

Submodule df_of_theta(const Polynomial& f, const TangentModule& theta) {
  if (*f.ring() != *theta.ring) throw std::invalid_argument("df(Theta): mixed rings");
  const int n = theta.ring->nvars();
  std::vector<Polynomial> dfs;
  dfs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) dfs.push_back(f.derivative(i));

  std::vector<Polynomial> gens;
  gens.reserve(theta.generators.size());
  for (const TermVector& field : theta.generators) {
    Polynomial pairing(theta.ring);
    for (int i = 0; i < n; ++i) pairing += field[i] * dfs[static_cast<size_t>(i)];
    gens.push_back(std::move(pairing));
  }
  return Submodule::ideal(theta.ring, std::move(gens));
}

LcvMinusIdeal lcv_minus_ideal(const VarietyGerm& x, const TangentModule& theta) {
  if (*x.ring != *theta.ring) throw std::invalid_argument("characteristic ideal: mixed rings");
  const int n = x.ring->nvars();

  std::vector<std::string> names = x.ring->names();
  std::set<std::string> seen(names.begin(), names.end());
  for (int i = 0; i < n; ++i) {
    std::string nm = "p" + std::to_string(i + 1);
    while (!seen.insert(nm).second) nm += "_";
    names.push_back(std::move(nm));
  }
  Ring cot = make_ring(std::move(names));
  std::vector<int> var_map(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) var_map[static_cast<size_t>(i)] = i;

  std::vector<Polynomial> gens;
  gens.reserve(theta.generators.size() + x.generators.size());
  for (const TermVector& field : theta.generators) {
    Polynomial symbol(cot);
    for (int i = 0; i < n; ++i)
      symbol += field[i].in_ring(cot, var_map) * Polynomial::variable(cot, n + i);
    gens.push_back(std::move(symbol));
  }
  for (const Polynomial& g : x.generators) gens.push_back(g.in_ring(cot, var_map));
  return LcvMinusIdeal{std::move(cot), std::move(gens)};
}

CohenMacaulayReport cohen_macaulay_report(const LcvMinusIdeal& l, const ComputeLimits& lim) {
  Submodule ideal = Submodule::ideal(l.cotangent_ring, l.generators);
  const MonomialOrdering ord = MonomialOrdering::local();
  CohenMacaulayReport rep;
  rep.dim = krull_dimension(ideal, ord, lim);
  rep.depth = depth(ideal, lim);
  rep.is_cm = rep.dim == rep.depth;
  return rep;
}

}  // namespace germ
