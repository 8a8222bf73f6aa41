#include "germcalc/germs.hpp"

#include <set>
#include <stdexcept>

namespace germ {

namespace {

void require_same_ring(const Ring& r, const Polynomial& p, const char* what) {
  if (*p.ring() != *r) throw std::invalid_argument(std::string(what) + ": mixed rings");
}

}  // namespace

MapGerm::MapGerm(Ring r, std::vector<Polynomial> comps)
    : ring(std::move(r)), components(std::move(comps)) {
  for (const Polynomial& p : components) {
    require_same_ring(ring, p, "map germ");
    if (!p.vanishes_at_origin())
      throw std::invalid_argument("map germ: component does not vanish at the origin");
  }
}

VarietyGerm::VarietyGerm(Ring r, std::vector<Polynomial> gens, bool icis)
    : ring(std::move(r)), generators(std::move(gens)), icis_claimed(icis) {
  for (const Polynomial& p : generators) {
    require_same_ring(ring, p, "variety germ");
    if (!p.vanishes_at_origin())
      throw std::invalid_argument("variety germ: equation does not vanish at the origin");
  }
}

OneFormCollection::OneFormCollection(Ring r, std::vector<std::vector<OneForm>> subs)
    : ring(std::move(r)), subcollections(std::move(subs)) {
  const int n = ring->nvars();
  for (const auto& sub : subcollections)
    for (const OneForm& w : sub) {
      if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("1-form collection: form needs one coefficient per variable");
      for (const Polynomial& c : w) require_same_ring(ring, c, "1-form collection");
    }
}

std::vector<int> OneFormCollection::sizes() const {
  std::vector<int> out;
  out.reserve(subcollections.size());
  for (const auto& sub : subcollections) out.push_back(static_cast<int>(sub.size()));
  return out;
}

PolyMatrix jacobian_rows(const Ring& ring, const std::vector<Polynomial>& components) {
  const int n = ring->nvars();
  PolyMatrix m(ring, static_cast<int>(components.size()), n);
  for (int i = 0; i < static_cast<int>(components.size()); ++i) {
    require_same_ring(ring, components[i], "jacobian");
    for (int j = 0; j < n; ++j) m.at(i, j) = components[i].derivative(j);
  }
  return m;
}

PolyMatrix jacobian_matrix(const MapGerm& m) { return jacobian_rows(m.ring, m.components); }

Submodule minors_of_order(const PolyMatrix& m, int t) {
  if (t < 1 || t > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor order out of range");
  return Submodule::ideal(m.ring(), m.minors(t));
}

Polynomial delta_determinant(const MapGerm& phi, const MapGerm& f) {
  if (*phi.ring != *f.ring) throw std::invalid_argument("delta: mixed rings");
  const int n = phi.ring->nvars();
  if (phi.target_dim() + f.target_dim() != n)
    throw std::invalid_argument("delta: stacked Jacobian is not square");
  std::vector<Polynomial> stack = phi.components;
  stack.insert(stack.end(), f.components.begin(), f.components.end());
  return jacobian_rows(phi.ring, stack).determinant();
}

std::vector<Polynomial> beta_generators(const MapGerm& phi, const MapGerm& f) {
  const Polynomial delta = delta_determinant(phi, f);
  const int n = phi.ring->nvars();
  std::vector<Polynomial> stack = phi.components;
  stack.insert(stack.end(), f.components.begin(), f.components.end());
  stack.push_back(delta);
  const PolyMatrix jac = jacobian_rows(phi.ring, stack);
  std::vector<Polynomial> betas;
  betas.reserve(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n + 1; ++i) {
    Polynomial minor = jac.without_row(i - 1).determinant();
    betas.push_back((n + 1 + i) % 2 == 0 ? minor : -minor);
  }
  return betas;
}

uint64_t DetRng::next() {
  state_ += 0x9E3779B97f4A7C15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long DetRng::int_in(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

namespace {

int rational_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
    for (int r = rank + 1; r < rows; ++r) {
      const Rational factor = m[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                              m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
      if (factor.is_zero()) continue;
      for (int c = col; c < cols; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            factor * m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

OneFormCollection random_linear_collection(const Ring& ring, const std::vector<int>& sizes,
                                           DetRng& rng) {
  const int n = ring->nvars();
  std::vector<std::vector<OneForm>> subs;
  for (int s : sizes) {
    if (s < 1 || s > n)
      throw std::invalid_argument("subcollection size must be between 1 and the variable count");
    std::vector<std::vector<Rational>> coeffs;
    for (int j = 0; j < s; ++j) {
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 1000) throw std::logic_error("cannot draw independent linear forms");
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) row.emplace_back(rng.int_in(-17, 17));
        coeffs.push_back(row);
        if (rational_rank(coeffs) == static_cast<int>(coeffs.size())) break;
        coeffs.pop_back();
      }
    }
    std::vector<OneForm> sub;
    for (const auto& row : coeffs) {
      OneForm w;
      for (const Rational& c : row) w.push_back(Polynomial::constant(ring, c));
      sub.push_back(std::move(w));
    }
    subs.push_back(std::move(sub));
  }
  return OneFormCollection(ring, std::move(subs));
}

OneFormCollection random_linear_collection(const Ring& ring, const std::vector<int>& sizes,
                                           uint64_t seed) {
  DetRng rng(seed);
  return random_linear_collection(ring, sizes, rng);
}

Suspension suspension_build(const VarietyGerm& x, const Polynomial& f,
                            const std::vector<std::string>& new_names,
                            const std::string& h_text) {
  require_same_ring(x.ring, f, "suspension");
  if (!f.vanishes_at_origin())
    throw std::invalid_argument("suspension: f does not vanish at the origin");

  const int n = x.ring->nvars();
  std::vector<std::string> names = x.ring->names();
  std::set<std::string> seen(names.begin(), names.end());
  for (const std::string& nm : new_names) {
    if (!seen.insert(nm).second)
      throw std::invalid_argument("suspension: variable name collision: " + nm);
    names.push_back(nm);
  }

  if (new_names.empty()) {
    Polynomial h = parse_polynomial(h_text, x.ring);
    if (!h.is_zero())
      throw std::invalid_argument("suspension: no new variables, h must be zero");
    return Suspension{x.ring, x, f, h};
  }

  Ring ext = make_ring(names);
  std::vector<int> var_map(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) var_map[static_cast<size_t>(i)] = i;

  Polynomial h = parse_polynomial(h_text, ext);
  for (const Term& t : h.terms())
    for (int i = 0; i < n; ++i)
      if (t.mono.exp(i) != 0)
        throw std::invalid_argument("suspension: h may involve only the new variables");
  if (!h.vanishes_at_origin())
    throw std::invalid_argument("suspension: h does not vanish at the origin");

  std::vector<Polynomial> gens;
  gens.reserve(x.generators.size());
  for (const Polynomial& g : x.generators) gens.push_back(g.in_ring(ext, var_map));
  VarietyGerm xt(ext, std::move(gens), x.icis_claimed);
  Polynomial capital_f = f.in_ring(ext, var_map) + h;
  return Suspension{ext, std::move(xt), std::move(capital_f), std::move(h)};
}

}  // namespace germ
