#include "germcalc/engine.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <deque>
#include <iostream>
#include <set>
#include <tuple>

namespace germ {

Colength Colength::finite(long v) {
  if (v < 0) throw std::invalid_argument("negative colength");
  return Colength(true, v);
}

long Colength::value() const {
  if (!finite_) throw std::logic_error("colength is infinite");
  return v_;
}

std::string Colength::str() const {
  return finite_ ? std::to_string(v_) : std::string("INFINITE");
}

namespace {

class Budget {
public:
  explicit Budget(const ComputeLimits& lim)
      : lim_(lim), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    ++steps_;
    if (lim_.step_budget && steps_ > lim_.step_budget)
      throw BudgetExceeded("step budget of " + std::to_string(lim_.step_budget) +
                           " exceeded");
    if (lim_.time_budget_s > 0 && (steps_ & 1023) == 0) {
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                     .count();
      if (s > lim_.time_budget_s)
        throw BudgetExceeded("time budget of " + std::to_string(lim_.time_budget_s) +
                             "s exceeded");
    }
  }

  bool trace() const { return lim_.trace; }

private:
  const ComputeLimits lim_;
  uint64_t steps_ = 0;
  std::chrono::steady_clock::time_point start_;
};

struct VTerm {
  int comp;
  Monomial mono;
  Rational coeff;
};

/// Module ordering used internally.  elim_rank > 0 splits the components in
/// two blocks with every term of the first block greater than every term of
/// the second; inside a block the public ordering decides.
struct EngineOrd {
  MonomialOrdering ord;
  int elim_rank = 0;

  int cmp(int ca, const Monomial& a, int cb, const Monomial& b) const {
    if (elim_rank > 0) {
      bool fa = ca < elim_rank, fb = cb < elim_rank;
      if (fa != fb) return fa ? 1 : -1;
    }
    return ord.cmp(ca, a, cb, b);
  }
};

/// Module element as one term list, strictly descending under EngineOrd.
struct Vec {
  std::vector<VTerm> t;

  bool zero() const { return t.empty(); }
  const VTerm& lead() const { return t.front(); }
  int maxdeg() const {
    int d = 0;
    for (const VTerm& v : t) d = std::max(d, static_cast<int>(v.mono.degree()));
    return d;
  }
};

int ecart(const Vec& v) { return v.maxdeg() - static_cast<int>(v.lead().mono.degree()); }

Vec flatten(const TermVector& v, const EngineOrd& eo) {
  Vec r;
  for (int c = 0; c < v.rank(); ++c)
    for (const Term& t : v[c].terms()) r.t.push_back({c, t.mono, t.coeff});
  std::sort(r.t.begin(), r.t.end(), [&](const VTerm& a, const VTerm& b) {
    return eo.cmp(a.comp, a.mono, b.comp, b.mono) > 0;
  });
  return r;
}

TermVector unflatten(const Vec& v, const Ring& ring, int rank) {
  std::vector<std::vector<Term>> buckets(static_cast<size_t>(rank));
  for (const VTerm& t : v.t) buckets[static_cast<size_t>(t.comp)].push_back({t.mono, t.coeff});
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<size_t>(rank));
  for (auto& b : buckets) comps.push_back(Polynomial::from_terms(ring, std::move(b)));
  return TermVector(std::move(comps));
}

void make_monic(Vec& v) {
  if (v.zero() || v.lead().coeff.is_one()) return;
  Rational inv = v.lead().coeff.inverse();
  for (VTerm& t : v.t) t.coeff *= inv;
}

/// Rescale by a unit so the coefficients are coprime integers with a
/// positive lead.  Without this the remainders in long local reductions
/// accumulate enormous numerators and denominators and the arithmetic,
/// not the step count, dominates the running time.
void strip_content(Vec& v) {
  if (v.zero()) return;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const VTerm& t : v.t) {
    const mpq_class& q = t.coeff.raw();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  if (sgn(v.lead().coeff.raw()) < 0) num_gcd = -num_gcd;
  Rational scale{mpq_class(den_lcm) / mpq_class(num_gcd)};
  if (scale.is_one()) return;
  for (VTerm& t : v.t) t.coeff *= scale;
}

Vec mul_term(const Vec& v, const Monomial& m, const Rational& c) {
  Vec r;
  r.t.reserve(v.t.size());
  for (const VTerm& t : v.t) r.t.push_back({t.comp, t.mono.times(m), t.coeff * c});
  return r;
}

/// a - c*x^m*b, merging the two descending term lists.
Vec axpy_sub(const Vec& a, const Rational& c, const Monomial& m, const Vec& b,
             const EngineOrd& eo) {
  Vec r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    Monomial bm = b.t[j].mono.times(m);
    int k = eo.cmp(a.t[i].comp, a.t[i].mono, b.t[j].comp, bm);
    if (k > 0) {
      r.t.push_back(a.t[i++]);
    } else if (k < 0) {
      r.t.push_back({b.t[j].comp, bm, -(b.t[j].coeff * c)});
      ++j;
    } else {
      Rational s = a.t[i].coeff - b.t[j].coeff * c;
      if (!s.is_zero()) r.t.push_back({a.t[i].comp, a.t[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < a.t.size()) r.t.push_back(a.t[i++]);
  while (j < b.t.size()) {
    r.t.push_back({b.t[j].comp, b.t[j].mono.times(m), -(b.t[j].coeff * c)});
    ++j;
  }
  return r;
}

bool lead_divides(const Vec& g, const Vec& h) {
  return g.lead().comp == h.lead().comp && g.lead().mono.divides(h.lead().mono);
}

/// Drop terms at or above the degree cutoff.  Only called once the cutoff is
/// certified, meaning every such term lies in the module on its own, so each
/// removal subtracts a module element and the result stays congruent.
void truncate_high(Vec& v, int cut) {
  if (cut == INT_MAX) return;
  std::erase_if(v.t,
                [&](const VTerm& t) { return static_cast<int>(t.mono.degree()) >= cut; });
}

/// Mora's weak normal form.  When the cheapest usable reducer has larger
/// ecart than the remainder, the remainder itself joins the reducer list;
/// this is what makes the loop terminate for local and mixed orderings.
/// Used for normal forms against an already computed basis.
Vec nf_mora(Vec h, const std::vector<Vec>& T, const std::vector<int>& T_ecart,
            const EngineOrd& eo, Budget& bud) {
  std::deque<Vec> extra;
  std::vector<int> extra_ecart;
  strip_content(h);
  while (!h.zero()) {
    int best = -1, best_e = 0;
    for (size_t i = 0; i < T.size() + extra.size(); ++i) {
      const Vec& g = i < T.size() ? T[i] : extra[i - T.size()];
      if (g.zero() || !lead_divides(g, h)) continue;
      int e = i < T.size() ? T_ecart[i] : extra_ecart[i - T.size()];
      if (best < 0 || e < best_e) {
        best = static_cast<int>(i);
        best_e = e;
      }
    }
    if (best < 0) return h;
    int h_e = ecart(h);
    if (best_e > h_e) {
      extra.push_back(h);
      extra_ecart.push_back(h_e);
    }
    const Vec& g = static_cast<size_t>(best) < T.size() ? T[static_cast<size_t>(best)]
                                                        : extra[static_cast<size_t>(best) - T.size()];
    Rational c = h.lead().coeff / g.lead().coeff;
    Monomial q = h.lead().mono.quotient_by(g.lead().mono);
    bud.tick();
    h = axpy_sub(h, c, q, g, eo);
    strip_content(h);
  }
  return h;
}

/// Top reduction used while building a basis.  For a local ordering the
/// computation runs on implicitly homogenized elements: a term's extra
/// exponent is ecart-many powers of the homogenizing variable, so a reducer
/// applies only when its ecart does not exceed the remainder's.  Remainders
/// the rule leaves alone simply become new basis elements, which keeps every
/// reduction inside one homogeneous degree and avoids Mora's long climbs.
Vec nf_top(Vec h, const std::vector<Vec>& T, const std::vector<int>& T_ecart,
           const EngineOrd& eo, int cut, Budget& bud) {
  const bool local = eo.ord.is_local();
  truncate_high(h, cut);
  strip_content(h);
  while (!h.zero()) {
    int h_e = local ? ecart(h) : 0;
    int best = -1, best_e = 0;
    size_t best_len = 0;
    for (size_t i = 0; i < T.size(); ++i) {
      const Vec& g = T[i];
      if (g.zero() || !lead_divides(g, h)) continue;
      int e = T_ecart[i];
      if (local && e > h_e) continue;
      if (best < 0 || e < best_e || (e == best_e && g.t.size() < best_len)) {
        best = static_cast<int>(i);
        best_e = e;
        best_len = g.t.size();
      }
    }
    if (best < 0) return h;
    const Vec& g = T[static_cast<size_t>(best)];
    Rational c = h.lead().coeff / g.lead().coeff;
    Monomial q = h.lead().mono.quotient_by(g.lead().mono);
    bud.tick();
    h = axpy_sub(h, c, q, g, eo);
    truncate_high(h, cut);
    strip_content(h);
  }
  return h;
}

struct SPair {
  int i, j;
  int comp;
  Monomial l;  // lcm of the two leading monomials
  int tl;      // lcm exponent of the homogenizing variable; 0 when global
};

struct BasisState {
  std::vector<Vec> B;
  std::vector<int> ec;
  std::vector<SPair> pairs;
  bool product_criterion = false;  // sound for ideals only
  int cut = INT_MAX;               // certified truncation degree
  int nvars = 0;                   // > 0 when corner tracking is on
  // least pure-power lead exponent seen, per component and variable
  std::vector<std::vector<int>> pp;
};

/// Degree bound from the recorded pure-power leads.  Once some x_v^(a_v)
/// leads in every variable, any monomial of degree 1 + sum of (a_v - 1) has
/// an exponent reaching a_v, so that whole power of the maximal ideal lies
/// in the leading module; division with remainder then puts it inside the
/// module itself, because for this ordering no term of a reducer has degree
/// below its lead.  INT_MAX while any variable is still uncovered.
int corner_bound(const BasisState& st) {
  int worst = 0;
  for (const auto& row : st.pp) {
    long s = 1;
    for (int a : row) {
      if (a == INT_MAX) return INT_MAX;
      s += a - 1;
    }
    worst = std::max(worst, static_cast<int>(std::max(s, 0L)));
  }
  return worst;
}

/// Gebauer-Moller pair update for one new element.  Under a local ordering
/// lcms and divisibility are taken in the homogenized ring, where an
/// element's extra exponent is its ecart.
void add_basis_element(BasisState& st, Vec h, bool local) {
  int k = static_cast<int>(st.B.size());
  int ck = h.lead().comp;
  const Monomial mk = h.lead().mono;
  const int ek = local ? ecart(h) : 0;

  if (st.nvars > 0) {
    int var = -1;
    bool pure = true;
    for (int v = 0; v < st.nvars; ++v) {
      if (mk.exp(v) == 0) continue;
      if (var >= 0) {
        pure = false;
        break;
      }
      var = v;
    }
    if (pure) {
      auto& row = st.pp[static_cast<size_t>(ck)];
      if (var < 0)
        std::fill(row.begin(), row.end(), 0);
      else
        row[static_cast<size_t>(var)] =
            std::min(row[static_cast<size_t>(var)], static_cast<int>(mk.exp(var)));
    }
  }

  // drop old pairs whose lcm the new lead strictly refines
  std::erase_if(st.pairs, [&](const SPair& p) {
    if (p.comp != ck || !mk.divides(p.l) || ek > p.tl) return false;
    auto refines = [&](int i) {
      Monomial l = Monomial::lcm(st.B[static_cast<size_t>(i)].lead().mono, mk);
      int tl = local ? std::max(st.ec[static_cast<size_t>(i)], ek) : 0;
      return l != p.l || tl != p.tl;
    };
    return refines(p.i) && refines(p.j);
  });

  struct Cand {
    int i;
    Monomial l;
    int tl;
    bool coprime;
  };
  std::vector<Cand> cand;
  for (int i = 0; i < k; ++i) {
    if (st.B[static_cast<size_t>(i)].zero()) continue;
    const VTerm& li = st.B[static_cast<size_t>(i)].lead();
    if (li.comp != ck) continue;
    int ei = local ? st.ec[static_cast<size_t>(i)] : 0;
    bool cop = li.mono.coprime(mk) && std::min(ei, ek) == 0;
    cand.push_back({i, Monomial::lcm(li.mono, mk), std::max(ei, ek), cop});
  }
  // drop candidates whose lcm another candidate's lcm strictly divides
  std::vector<Cand> kept;
  for (const Cand& c : cand) {
    bool dominated = false;
    for (const Cand& d : cand)
      if ((d.l != c.l || d.tl != c.tl) && d.l.divides(c.l) && d.tl <= c.tl) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(c);
  }
  // one pair per lcm value; prefer a coprime representative, which the
  // product criterion then removes along with its whole class
  std::vector<Cand> uniq;
  for (const Cand& c : kept) {
    bool merged = false;
    for (Cand& u : uniq)
      if (u.l == c.l && u.tl == c.tl) {
        if (st.product_criterion && c.coprime && !u.coprime) u = c;
        merged = true;
        break;
      }
    if (!merged) uniq.push_back(c);
  }
  for (const Cand& c : uniq) {
    if (st.product_criterion && c.coprime) continue;
    // every term of such a pair's s-vector has degree >= the lcm degree, so
    // truncation would erase the whole reduction anyway
    if (static_cast<int>(c.l.degree()) >= st.cut) continue;
    st.pairs.push_back({c.i, k, ck, c.l, c.tl});
  }

  st.ec.push_back(ecart(h));
  st.B.push_back(std::move(h));
}

/// Pair with the smallest homogenized lcm degree goes first; degrevlex,
/// then indices, break ties so runs are reproducible.
size_t select_pair(const std::vector<SPair>& pairs) {
  size_t best = 0;
  for (size_t i = 1; i < pairs.size(); ++i) {
    const SPair& a = pairs[i];
    const SPair& b = pairs[best];
    int da = static_cast<int>(a.l.degree()) + a.tl;
    int db = static_cast<int>(b.l.degree()) + b.tl;
    if (da != db) {
      if (da < db) best = i;
      continue;
    }
    int c = Monomial::cmp_degrevlex(a.l, b.l);
    if (c != 0) {
      if (c < 0) best = i;
      continue;
    }
    if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = i;
  }
  return best;
}

Vec spoly(const Vec& f, const Vec& g, const Monomial& l, const EngineOrd& eo) {
  Vec a = mul_term(f, l.quotient_by(f.lead().mono), f.lead().coeff.inverse());
  return axpy_sub(a, g.lead().coeff.inverse(), l.quotient_by(g.lead().mono), g, eo);
}

/// Keep only elements whose lead no other kept lead divides; the first of two
/// equal leads survives.
std::vector<Vec> interreduce_leads(std::vector<Vec> B) {
  std::vector<bool> drop(B.size(), false);
  for (size_t i = 0; i < B.size(); ++i) {
    for (size_t j = 0; j < B.size() && !drop[i]; ++j) {
      if (i == j || !lead_divides(B[j], B[i])) continue;
      if (B[j].lead().mono == B[i].lead().mono)
        drop[i] = j < i;
      else
        drop[i] = true;
    }
  }
  std::vector<Vec> out;
  for (size_t i = 0; i < B.size(); ++i)
    if (!drop[i]) out.push_back(std::move(B[i]));
  return out;
}

/// One monomial generator x^a e_c for every exponent vector of total degree
/// cut and every component.  The degree bound certifies all of them as module
/// elements; appending them keeps the returned basis a generating set after
/// terms of that degree were dropped along the way.
void append_corner_generators(std::vector<Vec>& B, int rank, int nvars, int cut) {
  if (cut == INT_MAX) return;
  std::vector<unsigned> e(static_cast<size_t>(nvars), 0);
  auto emit = [&](auto&& self, int v, int left) -> void {
    if (v + 1 == nvars) {
      e[static_cast<size_t>(v)] = static_cast<unsigned>(left);
      Monomial m = Monomial::from_exponents(e);
      for (int c = 0; c < rank; ++c) {
        Vec u;
        u.t.push_back({c, m, Rational(1)});
        B.push_back(std::move(u));
      }
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[static_cast<size_t>(v)] = static_cast<unsigned>(a);
      self(self, v + 1, left - a);
    }
  };
  if (nvars > 0) emit(emit, 0, cut);
}

std::vector<Vec> standard_basis_core(std::vector<Vec> inputs, const EngineOrd& eo,
                                     bool ideal_case, int rank, int nvars, Budget& bud) {
  const bool local = eo.ord.is_local();
  // Degree truncation needs every term of a reducer to sit at or above its
  // lead degree.  That holds for the local ordering with a term-first module
  // extension; it fails with a component-first extension and for the
  // elimination blocks used by syzygy extraction, which must stay exact.
  const bool corner = local && eo.elim_rank == 0 &&
                      (rank == 1 || eo.ord.ext != ModuleExtension::PositionOverTerm);
  int cut = INT_MAX;
  for (int attempt = 0;; ++attempt) {
    BasisState st;
    st.product_criterion = ideal_case;
    st.cut = cut;
    if (corner) {
      st.nvars = nvars;
      st.pp.assign(static_cast<size_t>(rank),
                   std::vector<int>(static_cast<size_t>(nvars), INT_MAX));
    }
    // a sharper bound invalidates pending pairs, so rerun from the inputs;
    // the bound is a fact about the module and carries over
    const bool may_restart = corner && attempt < 32;
    bool tightened = false;
    auto add = [&](Vec h) {
      add_basis_element(st, std::move(h), local);
      if (!may_restart) return false;
      int n = corner_bound(st);
      if (n >= cut) return false;
      cut = n;
      if (bud.trace()) std::cerr << "degree bound " << n << ", rerunning\n";
      return true;
    };
    for (const Vec& g : inputs) {
      Vec h = nf_top(g, st.B, st.ec, eo, st.cut, bud);
      if (h.zero()) continue;
      make_monic(h);
      if ((tightened = add(std::move(h)))) break;
    }
    while (!tightened && !st.pairs.empty()) {
      size_t pi = select_pair(st.pairs);
      SPair p = st.pairs[static_cast<size_t>(pi)];
      st.pairs.erase(st.pairs.begin() + static_cast<long>(pi));
      bud.tick();
      Vec s =
          spoly(st.B[static_cast<size_t>(p.i)], st.B[static_cast<size_t>(p.j)], p.l, eo);
      Vec h = nf_top(std::move(s), st.B, st.ec, eo, st.cut, bud);
      if (h.zero()) {
        if (bud.trace()) std::cerr << "pair (" << p.i << "," << p.j << ") -> 0\n";
        continue;
      }
      make_monic(h);
      if (bud.trace())
        std::cerr << "pair (" << p.i << "," << p.j << ") -> basis element " << st.B.size()
                  << "\n";
      tightened = add(std::move(h));
    }
    if (tightened) continue;
    append_corner_generators(st.B, rank, nvars, st.cut);
    return interreduce_leads(std::move(st.B));
  }
}

void check_module_input(const Ring& ring, int rank, const TermVector& v) {
  require_same_ring(ring, v.ring());
  if (v.rank() != rank) throw std::invalid_argument("module rank mismatch");
}

std::vector<Vec> flatten_all(const std::vector<TermVector>& gens, const EngineOrd& eo) {
  std::vector<Vec> out;
  out.reserve(gens.size());
  for (const TermVector& g : gens) out.push_back(flatten(g, eo));
  return out;
}

/// Syzygy generators of G inside O^m, via a standard basis of the graph
/// module <g_i + e_{r+i}> under the ordering that eliminates the first block.
std::vector<TermVector> syzygy_core(const std::vector<TermVector>& G,
                                    const MonomialOrdering& ord, Budget& bud) {
  if (G.empty()) throw std::invalid_argument("syzygies of an empty generator list");
  const Ring& ring = G.front().ring();
  int r = G.front().rank();
  int m = static_cast<int>(G.size());
  EngineOrd eo{ord, r};
  std::vector<Vec> inputs;
  inputs.reserve(G.size());
  for (int i = 0; i < m; ++i) {
    check_module_input(ring, r, G[static_cast<size_t>(i)]);
    Vec v = flatten(G[static_cast<size_t>(i)], eo);
    Vec unit;
    unit.t.push_back({r + i, Monomial(ring->nvars()), Rational(1)});
    v = axpy_sub(v, Rational(-1), Monomial(ring->nvars()), unit, eo);
    inputs.push_back(std::move(v));
  }
  std::vector<Vec> B =
      standard_basis_core(std::move(inputs), eo, false, r + m, ring->nvars(), bud);
  std::vector<TermVector> syz;
  for (const Vec& b : B) {
    bool pure_tail = true;
    for (const VTerm& t : b.t)
      if (t.comp < r) {
        pure_tail = false;
        break;
      }
    if (!pure_tail) continue;
    Vec proj;
    for (const VTerm& t : b.t) proj.t.push_back({t.comp - r, t.mono, t.coeff});
    syz.push_back(unflatten(proj, ring, m));
  }
  return syz;
}

}  // namespace

TermVector normal_form(const TermVector& v, const std::vector<TermVector>& G,
                       const MonomialOrdering& ord, const ComputeLimits& lim) {
  Budget bud(lim);
  EngineOrd eo{ord, 0};
  std::vector<Vec> T;
  std::vector<int> T_ec;
  for (const TermVector& g : G) {
    check_module_input(v.ring(), v.rank(), g);
    Vec f = flatten(g, eo);
    if (f.zero()) continue;
    T_ec.push_back(ecart(f));
    T.push_back(std::move(f));
  }
  Vec h = nf_mora(flatten(v, eo), T, T_ec, eo, bud);
  return unflatten(h, v.ring(), v.rank());
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       const MonomialOrdering& ord, const ComputeLimits& lim) {
  std::vector<TermVector> gv;
  gv.reserve(G.size());
  for (const Polynomial& g : G) gv.push_back(TermVector({g}));
  return normal_form(TermVector({p}), gv, ord, lim)[0];
}

StandardBasisResult standard_basis(const Submodule& M, const MonomialOrdering& ord,
                                   const ComputeLimits& lim) {
  Budget bud(lim);
  EngineOrd eo{ord, 0};
  std::vector<Vec> B = standard_basis_core(flatten_all(M.gens, eo), eo, M.rank == 1,
                                           M.rank, M.ring->nvars(), bud);
  StandardBasisResult res;
  res.ordering = ord;
  res.rank = M.rank;
  for (const Vec& b : B) {
    res.leading_module.push_back({b.lead().comp, b.lead().mono});
    res.basis.push_back(unflatten(b, M.ring, M.rank));
  }
  return res;
}

Colength colength(const StandardBasisResult& sb) {
  if (sb.basis.empty()) return Colength::infinite();
  int n = sb.basis.front().ring()->nvars();
  long total = 0;
  for (int c = 0; c < sb.rank; ++c) {
    std::vector<Monomial> leads;
    for (const auto& [comp, m] : sb.leading_module)
      if (comp == c) leads.push_back(m);
    // finite exactly when some pure power of every variable leads
    for (int i = 0; i < n; ++i) {
      bool found = false;
      for (const Monomial& m : leads) {
        bool pure = true;
        for (int j = 0; j < n && pure; ++j)
          if (j != i && m.exp(j) > 0) pure = false;
        if (pure) {
          found = true;
          break;
        }
      }
      if (!found) return Colength::infinite();
    }
    std::set<Monomial> seen;
    std::vector<Monomial> stack{Monomial(n)};
    seen.insert(Monomial(n));
    while (!stack.empty()) {
      Monomial m = stack.back();
      stack.pop_back();
      bool in_lead = false;
      for (const Monomial& l : leads)
        if (l.divides(m)) {
          in_lead = true;
          break;
        }
      if (in_lead) continue;
      ++total;
      for (int i = 0; i < n; ++i) {
        Monomial child = m.times(Monomial::variable(n, i));
        if (seen.insert(child).second) stack.push_back(child);
      }
    }
  }
  return Colength::finite(total);
}

Colength colength(const Submodule& M, const MonomialOrdering& ord,
                  const ComputeLimits& lim) {
  return colength(standard_basis(M, ord, lim));
}

int krull_dimension(const Submodule& M, const MonomialOrdering& ord,
                    const ComputeLimits& lim) {
  if (M.rank != 1) throw std::invalid_argument("Krull dimension needs an ideal");
  StandardBasisResult sb = standard_basis(M, ord, lim);
  int n = M.ring->nvars();
  std::vector<Monomial> leads;
  for (const auto& [comp, m] : sb.leading_module) {
    if (m.is_one()) return -1;  // unit ideal, zero ring
    leads.push_back(m);
  }
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const Monomial& m : leads) {
      bool escapes = false;
      for (int j = 0; j < n && !escapes; ++j)
        if (m.exp(j) > 0 && !(mask & (1u << j))) escapes = true;
      if (!escapes) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, static_cast<int>(std::popcount(mask)));
  }
  return best;
}

Submodule syzygy_module(const std::vector<TermVector>& G, const MonomialOrdering& ord,
                        const ComputeLimits& lim) {
  Budget bud(lim);
  std::vector<TermVector> syz = syzygy_core(G, ord, bud);
  return Submodule(G.front().ring(), static_cast<int>(G.size()), std::move(syz));
}

namespace {

TermVector drop_component(const TermVector& v, int c) {
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<size_t>(v.rank() - 1));
  for (int i = 0; i < v.rank(); ++i)
    if (i != c) comps.push_back(v[i]);
  return TermVector(std::move(comps));
}

}  // namespace

Resolution minimal_free_resolution(const Submodule& M, const ComputeLimits& lim) {
  Budget bud(lim);
  MonomialOrdering ord = MonomialOrdering::local(ModuleExtension::TermOverPosition);
  const Ring& ring = M.ring;
  int n = ring->nvars();
  int r = M.rank;
  std::vector<TermVector> G;
  for (const TermVector& g : M.gens) {
    check_module_input(ring, r, g);
    if (!g.is_zero()) G.push_back(g);
  }

  // a generator with a unit entry splits off one free summand of O^r
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t gi = 0; gi < G.size() && !changed; ++gi) {
      for (int c = 0; c < r && !changed; ++c) {
        if (G[gi][c].constant_term().is_zero()) continue;
        if (r == 1) throw std::domain_error("quotient module is zero");
        TermVector pivot = G[gi];
        std::vector<TermVector> next;
        for (size_t j = 0; j < G.size(); ++j) {
          if (j == gi) continue;
          TermVector t = G[j].scaled(pivot[c]) - pivot.scaled(G[j][c]);
          t = drop_component(t, c);
          if (!t.is_zero()) next.push_back(std::move(t));
        }
        G = std::move(next);
        --r;
        changed = true;
      }
    }
  }

  Resolution res;
  res.ranks.push_back(r);
  res.minimal = true;
  if (G.empty()) return res;

  std::vector<TermVector> cur = std::move(G);
  while (true) {
    std::vector<TermVector> S = syzygy_core(cur, ord, bud);
    // a syzygy with a unit coordinate marks a redundant generator
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t si = 0; si < S.size() && !changed; ++si) {
        for (int k = 0; k < static_cast<int>(cur.size()) && !changed; ++k) {
          if (S[si][k].constant_term().is_zero()) continue;
          TermVector pivot = S[si];
          std::vector<TermVector> next;
          for (size_t j = 0; j < S.size(); ++j) {
            if (j == si) continue;
            TermVector t = S[j].scaled(pivot[k]) - pivot.scaled(S[j][k]);
            t = drop_component(t, k);
            if (!t.is_zero()) next.push_back(std::move(t));
          }
          cur.erase(cur.begin() + k);
          S = std::move(next);
          changed = true;
        }
      }
    }
    PolyMatrix map(ring, res.ranks.back(), static_cast<int>(cur.size()));
    for (int j = 0; j < static_cast<int>(cur.size()); ++j)
      for (int i = 0; i < res.ranks.back(); ++i)
        map.at(i, j) = cur[static_cast<size_t>(j)][i];
    res.maps.push_back(std::move(map));
    res.ranks.push_back(static_cast<int>(cur.size()));
    if (S.empty()) break;
    cur = std::move(S);
    if (static_cast<int>(res.maps.size()) > n)
      throw std::logic_error("resolution longer than the ambient dimension");
  }
  return res;
}

int depth(const Submodule& M, const ComputeLimits& lim) {
  Resolution res = minimal_free_resolution(M, lim);
  return M.ring->nvars() - static_cast<int>(res.maps.size());
}

bool module_membership(const TermVector& v, const Submodule& M,
                       const MonomialOrdering& ord, const ComputeLimits& lim) {
  check_module_input(M.ring, M.rank, v);
  StandardBasisResult sb = standard_basis(M, ord, lim);
  return normal_form(v, sb.basis, ord, lim).is_zero();
}

bool module_equality(const Submodule& A, const Submodule& B,
                     const MonomialOrdering& ord, const ComputeLimits& lim) {
  require_same_ring(A.ring, B.ring);
  if (A.rank != B.rank) throw std::invalid_argument("module rank mismatch");
  StandardBasisResult sa = standard_basis(A, ord, lim);
  StandardBasisResult sbb = standard_basis(B, ord, lim);
  for (const TermVector& g : A.gens)
    if (!normal_form(g, sbb.basis, ord, lim).is_zero()) return false;
  for (const TermVector& g : B.gens)
    if (!normal_form(g, sa.basis, ord, lim).is_zero()) return false;
  return true;
}

}  // namespace germ
