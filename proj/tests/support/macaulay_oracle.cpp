#include "macaulay_oracle.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>

namespace germ::testing {

namespace {

constexpr int64_t kPrimes[2] = {2147483629, 2147483563};

void enumerate_below(int nv, int cap, std::vector<unsigned>& prefix,
                     std::vector<std::vector<unsigned>>& out) {
  if (static_cast<int>(prefix.size()) == nv) {
    out.push_back(prefix);
    return;
  }
  for (int e = 0; e < cap; ++e) {
    prefix.push_back(static_cast<unsigned>(e));
    enumerate_below(nv, cap - e, prefix, out);
    prefix.pop_back();
  }
}

int64_t mod_pow(int64_t b, int64_t e, int64_t p) {
  int64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<int64_t>((__int128)r * b % p);
    b = static_cast<int64_t>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

int64_t coeff_mod(const Rational& c, int64_t p) {
  const mpq_class& q = c.raw();
  int64_t num = static_cast<int64_t>(mpz_fdiv_ui(q.get_num().get_mpz_t(),
                                                 static_cast<unsigned long>(p)));
  int64_t den = static_cast<int64_t>(mpz_fdiv_ui(q.get_den().get_mpz_t(),
                                                 static_cast<unsigned long>(p)));
  if (den == 0) throw std::runtime_error("denominator divisible by oracle prime");
  return static_cast<int64_t>((__int128)num * mod_pow(den, p - 2, p) % p);
}

long rank_mod(std::vector<std::vector<int64_t>>& a, int64_t p) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  long r = 0;
  for (size_t col = 0; col < cols && static_cast<size_t>(r) < rows; ++col) {
    size_t piv = rows;
    for (size_t i = static_cast<size_t>(r); i < rows; ++i)
      if (a[i][col]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[static_cast<size_t>(r)], a[piv]);
    int64_t inv = mod_pow(a[static_cast<size_t>(r)][col], p - 2, p);
    for (size_t j = col; j < cols; ++j)
      a[static_cast<size_t>(r)][j] =
          static_cast<int64_t>((__int128)a[static_cast<size_t>(r)][j] * inv % p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == static_cast<size_t>(r) || !a[i][col]) continue;
      int64_t f = a[i][col];
      for (size_t j = col; j < cols; ++j) {
        a[i][j] = (a[i][j] - (__int128)f * a[static_cast<size_t>(r)][j]) % p;
        if (a[i][j] < 0) a[i][j] += p;
      }
    }
    ++r;
  }
  return r;
}

long dim_truncated(const std::vector<Polynomial>& gens, int nv, int D, int64_t p) {
  std::vector<std::vector<unsigned>> monos;
  std::vector<unsigned> prefix;
  enumerate_below(nv, D, prefix, monos);
  std::map<std::vector<unsigned>, size_t> index;
  for (size_t j = 0; j < monos.size(); ++j) index[monos[j]] = j;

  std::vector<std::vector<int64_t>> rows;
  for (const Polynomial& g : gens) {
    for (const auto& alpha : monos) {
      std::vector<int64_t> row(monos.size(), 0);
      bool any = false;
      for (const Term& t : g.terms()) {
        std::vector<unsigned> m(static_cast<size_t>(nv));
        unsigned deg = 0;
        for (int i = 0; i < nv; ++i) {
          m[static_cast<size_t>(i)] = alpha[static_cast<size_t>(i)] + t.mono.exp(i);
          deg += m[static_cast<size_t>(i)];
        }
        if (static_cast<int>(deg) >= D) continue;
        int64_t c = coeff_mod(t.coeff, p);
        if (!c) continue;
        size_t j = index.at(m);
        row[j] = (row[j] + c) % p;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return static_cast<long>(monos.size()) - rank_mod(rows, p);
}

}  // namespace

long macaulay_colength(const std::vector<Polynomial>& gens, int degree_cap) {
  if (gens.empty()) throw std::invalid_argument("oracle needs generators");
  int nv = gens.front().ring()->nvars();
  for (const Polynomial& g : gens)
    if (!g.vanishes_at_origin())
      throw std::invalid_argument("oracle generators must vanish at the origin");
  long prev = -1;
  for (int D = 2; D <= degree_cap; ++D) {
    long d0 = dim_truncated(gens, nv, D, kPrimes[0]);
    long d1 = dim_truncated(gens, nv, D, kPrimes[1]);
    if (d0 != d1) throw std::runtime_error("oracle primes disagree");
    if (prev >= 0 && d0 == prev) return d0;
    prev = d0;
  }
  throw std::runtime_error("oracle did not stabilize below the degree cap");
}

}  // namespace germ::testing
