#include "germcalc/module.hpp"

#include <sstream>

namespace germ {

TermVector::TermVector(Ring ring, int rank) : ring_(std::move(ring)) {
  if (rank < 1) throw std::invalid_argument("module rank must be positive");
  comps_.assign(static_cast<size_t>(rank), Polynomial(ring_));
}

TermVector::TermVector(std::vector<Polynomial> comps) {
  if (comps.empty()) throw std::invalid_argument("module rank must be positive");
  ring_ = comps.front().ring();
  for (const Polynomial& p : comps) require_same_ring(ring_, p.ring());
  comps_ = std::move(comps);
}

TermVector TermVector::unit(const Ring& ring, int rank, int comp) {
  TermVector v(ring, rank);
  v[comp] = Polynomial::constant(ring, 1);
  return v;
}

bool TermVector::is_zero() const {
  for (const Polynomial& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

TermVector TermVector::operator-() const {
  TermVector r(*this);
  for (Polynomial& p : r.comps_) p = -p;
  return r;
}

TermVector& TermVector::operator+=(const TermVector& o) {
  if (rank() != o.rank()) throw std::invalid_argument("module rank mismatch");
  for (int i = 0; i < rank(); ++i) comps_[static_cast<size_t>(i)] += o[i];
  return *this;
}

TermVector& TermVector::operator-=(const TermVector& o) {
  if (rank() != o.rank()) throw std::invalid_argument("module rank mismatch");
  for (int i = 0; i < rank(); ++i) comps_[static_cast<size_t>(i)] -= o[i];
  return *this;
}

TermVector TermVector::scaled(const Polynomial& p) const {
  TermVector r(*this);
  for (Polynomial& c : r.comps_) c = c * p;
  return r;
}

std::string TermVector::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ", ";
    os << comps_[static_cast<size_t>(i)].str();
  }
  os << "]";
  return os.str();
}

Submodule::Submodule(Ring r, int rk, std::vector<TermVector> g)
    : ring(std::move(r)), rank(rk), gens(std::move(g)) {
  if (rank < 1) throw std::invalid_argument("module rank must be positive");
  for (const TermVector& v : gens) {
    require_same_ring(ring, v.ring());
    if (v.rank() != rank) throw std::invalid_argument("generator rank mismatch");
  }
}

Submodule Submodule::ideal(const Ring& r, std::vector<Polynomial> polys) {
  std::vector<TermVector> gens;
  gens.reserve(polys.size());
  for (Polynomial& p : polys) {
    require_same_ring(r, p.ring());
    gens.push_back(TermVector({std::move(p)}));
  }
  return Submodule(r, 1, std::move(gens));
}

std::vector<Polynomial> Submodule::ideal_gens() const {
  if (rank != 1) throw std::logic_error("not an ideal");
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const TermVector& v : gens) out.push_back(v[0]);
  return out;
}

PolyMatrix::PolyMatrix(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Polynomial(ring_));
}

PolyMatrix PolyMatrix::from_rows(const Ring& ring,
                                 std::vector<std::vector<Polynomial>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  PolyMatrix m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      require_same_ring(ring, rows[static_cast<size_t>(i)][static_cast<size_t>(j)].ring());
      m.at(i, j) = std::move(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
  }
  return m;
}

const Polynomial& PolyMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
  return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

Polynomial& PolyMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
  return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

std::vector<Polynomial> PolyMatrix::column(int j) const {
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

TermVector PolyMatrix::column_vector(int j) const { return TermVector(column(j)); }

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows,
                                 const std::vector<int>& cols) const {
  PolyMatrix m(ring_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return m;
}

PolyMatrix PolyMatrix::without_row(int drop) const {
  std::vector<int> rows;
  for (int i = 0; i < rows_; ++i)
    if (i != drop) rows.push_back(i);
  std::vector<int> cols;
  for (int j = 0; j < cols_; ++j) cols.push_back(j);
  return submatrix(rows, cols);
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial rem = p;
  Polynomial quot(p.ring());
  const Term& qlead = q.terms().front();  // degrevlex leading term
  while (!rem.is_zero()) {
    const Term& rlead = rem.terms().front();
    if (!qlead.mono.divides(rlead.mono))
      throw std::domain_error("polynomial division is not exact");
    Monomial m = rlead.mono.quotient_by(qlead.mono);
    Rational c = rlead.coeff / qlead.coeff;
    quot += Polynomial::term(p.ring(), m, c);
    rem -= q.times_term(m, c);
  }
  return quot;
}

namespace {

Polynomial det_cofactor(const PolyMatrix& m) {
  int n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  Polynomial d(m.ring());
  std::vector<int> all_cols;
  for (int j = 0; j < n; ++j) all_cols.push_back(j);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<int> rows, cols;
    for (int i = 1; i < n; ++i) rows.push_back(i);
    for (int k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Polynomial minor = det_cofactor(m.submatrix(rows, cols));
    Polynomial contrib = m.at(0, j) * minor;
    if (j % 2)
      d -= contrib;
    else
      d += contrib;
  }
  return d;
}

Polynomial det_bareiss(const PolyMatrix& input) {
  int n = input.rows();
  PolyMatrix b = input;
  Polynomial prev = Polynomial::constant(input.ring(), 1);
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (b.at(k, k).is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (!b.at(i, k).is_zero()) {
          swap = i;
          break;
        }
      if (swap < 0) return Polynomial::zero(input.ring());
      for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(swap, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
        b.at(i, j) = exact_quotient(num, prev);
      }
      b.at(i, k) = Polynomial::zero(input.ring());
    }
    prev = b.at(k, k);
  }
  Polynomial d = b.at(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ <= 3) return det_cofactor(*this);
  return det_bareiss(*this);
}

std::vector<Polynomial> PolyMatrix::minors(int t) const {
  if (t < 0) throw std::invalid_argument("minor order must be non-negative");
  std::vector<Polynomial> out;
  if (t > rows_ || t > cols_) return out;
  std::vector<int> rsel(static_cast<size_t>(t)), csel(static_cast<size_t>(t));
  auto next_combo = [](std::vector<int>& sel, int limit) {
    int k = static_cast<int>(sel.size());
    int i = k - 1;
    while (i >= 0 && sel[static_cast<size_t>(i)] == limit - k + i) --i;
    if (i < 0) return false;
    ++sel[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
    return true;
  };
  for (int i = 0; i < t; ++i) rsel[static_cast<size_t>(i)] = i;
  do {
    for (int i = 0; i < t; ++i) csel[static_cast<size_t>(i)] = i;
    do {
      out.push_back(submatrix(rsel, csel).determinant());
    } while (next_combo(csel, cols_));
  } while (next_combo(rsel, rows_));
  return out;
}

}  // namespace germ
