#pragma once

#include "germcalc/polynomial.hpp"

#include <string>
#include <vector>

namespace germ {

/// Element of a free module O^r, stored as one polynomial per component.
class TermVector {
public:
  TermVector(Ring ring, int rank);
  explicit TermVector(std::vector<Polynomial> comps);
  static TermVector unit(const Ring& ring, int rank, int comp);

  const Ring& ring() const { return ring_; }
  int rank() const { return static_cast<int>(comps_.size()); }
  bool is_zero() const;
  const Polynomial& operator[](int i) const { return comps_[static_cast<size_t>(i)]; }
  Polynomial& operator[](int i) { return comps_[static_cast<size_t>(i)]; }
  const std::vector<Polynomial>& components() const { return comps_; }

  TermVector operator-() const;
  TermVector& operator+=(const TermVector& o);
  TermVector& operator-=(const TermVector& o);
  friend TermVector operator+(TermVector a, const TermVector& b) { return a += b; }
  friend TermVector operator-(TermVector a, const TermVector& b) { return a -= b; }
  TermVector scaled(const Polynomial& p) const;

  bool operator==(const TermVector& o) const { return comps_ == o.comps_; }

  std::string str() const;  // "[p1, p2, ...]"

private:
  Ring ring_;
  std::vector<Polynomial> comps_;
};

/// Finitely generated submodule of O^rank (an ideal when rank == 1).
struct Submodule {
  Ring ring;
  int rank = 1;
  std::vector<TermVector> gens;

  Submodule(Ring r, int rk, std::vector<TermVector> g);
  static Submodule ideal(const Ring& r, std::vector<Polynomial> gens);
  std::vector<Polynomial> ideal_gens() const;  // pre: rank == 1
};

/// Dense polynomial matrix.
class PolyMatrix {
public:
  PolyMatrix(Ring ring, int rows, int cols);
  static PolyMatrix from_rows(const Ring& ring, std::vector<std::vector<Polynomial>> rows);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Polynomial& at(int i, int j) const;
  Polynomial& at(int i, int j);

  std::vector<Polynomial> column(int j) const;
  TermVector column_vector(int j) const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix without_row(int i) const;

  /// Cofactor expansion up to 3x3, fraction-free Bareiss elimination beyond.
  Polynomial determinant() const;

  /// All t-by-t minors; row index sets vary in the outer loop, column sets in
  /// the inner one, both enumerated lexicographically.
  std::vector<Polynomial> minors(int t) const;

private:
  Ring ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

/// Exact quotient p / q; throws std::domain_error when the division is not
/// exact (Bareiss pivots always divide exactly).
Polynomial exact_quotient(const Polynomial& p, const Polynomial& q);

}  // namespace germ
