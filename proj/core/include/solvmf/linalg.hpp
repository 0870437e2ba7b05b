// Dense exact linear algebra over the Gaussian rationals: Gaussian
// elimination with deterministic pivoting (first nonzero column, first
// row), reduced row echelon form, kernel bases and quotient
// representatives. Pivot determinism is what makes representative bases
// reproducible across runs and platforms.
#pragma once

#include <vector>

#include "solvmf/scalars.hpp"

namespace solvmf {

using QVector = std::vector<GaussRat>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussRat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const GaussRat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix conj_transpose() const;
  bool is_zero() const;

  QVector apply(const QVector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  QVector a_;
};

// Row echelon data: reduced rows (pivot entries 1, pivot columns cleared
// elsewhere) with their pivot column indices, ascending.
struct RowEchelon {
  std::vector<QVector> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
};

// Reduced row echelon form of the given row vectors (all of equal length).
RowEchelon rref(std::vector<QVector> rows);

// v minus its projection onto the echelon row space (eliminates v's entries
// at the pivot columns).
QVector reduce_against(const RowEchelon& ech, QVector v);

int rank(const Matrix& m);

// Canonical kernel basis of m (vectors in the source space): one vector per
// free column of the RREF, with unit entry at the free column.
std::vector<QVector> kernel_basis(const Matrix& m);

// Canonical basis of ker(d_out) / im(d_in): kernel vectors reduced against
// the image row space, then re-echelonized. Requires im(d_in) <= ker(d_out).
std::vector<QVector> quotient_representatives(const Matrix& d_out, const Matrix& d_in);

}  // namespace solvmf
