#include "solvmf/linalg.hpp"

#include <stdexcept>

namespace solvmf {

Matrix Matrix::conj_transpose() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c).conj();
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

QVector Matrix::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
  QVector out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: size mismatch");
  Matrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c)
        if (!b.at(k, c).is_zero()) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

RowEchelon rref(std::vector<QVector> rows) {
  RowEchelon ech;
  if (rows.empty()) return ech;
  const int cols = static_cast<int>(rows[0].size());
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < static_cast<int>(rows.size()); ++col) {
    int found = -1;
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][col].is_zero()) {
        found = r;
        break;
      }
    if (found < 0) continue;
    std::swap(rows[pivot_row], rows[found]);
    GaussRat inv = GaussRat(1) / rows[pivot_row][col];
    for (int c = col; c < cols; ++c) rows[pivot_row][c] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      GaussRat factor = rows[r][col];
      for (int c = col; c < cols; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    ech.pivots.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  ech.rows = std::move(rows);
  return ech;
}

QVector reduce_against(const RowEchelon& ech, QVector v) {
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    const GaussRat& coeff = v[ech.pivots[r]];
    if (coeff.is_zero()) continue;
    GaussRat factor = coeff;  // pivot entries are 1
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * ech.rows[r][c];
  }
  return v;
}

namespace {

std::vector<QVector> matrix_rows(const Matrix& m) {
  std::vector<QVector> rows(m.rows(), QVector(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  return rows;
}

}  // namespace

int rank(const Matrix& m) { return rref(matrix_rows(m)).rank(); }

std::vector<QVector> kernel_basis(const Matrix& m) {
  RowEchelon ech = rref(matrix_rows(m));
  std::vector<QVector> basis;
  std::size_t next_pivot = 0;
  for (int col = 0; col < m.cols(); ++col) {
    if (next_pivot < ech.pivots.size() && ech.pivots[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    QVector v(m.cols());
    v[col] = GaussRat(1);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVector> quotient_representatives(const Matrix& d_out, const Matrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("quotient_representatives: chain degree mismatch");
  std::vector<QVector> image_vectors(d_in.cols(), QVector(d_in.rows()));
  for (int r = 0; r < d_in.rows(); ++r)
    for (int c = 0; c < d_in.cols(); ++c) image_vectors[c][r] = d_in.at(r, c);
  RowEchelon image = rref(std::move(image_vectors));
  std::vector<QVector> reduced;
  for (auto& k : kernel_basis(d_out)) {
    QVector r = reduce_against(image, std::move(k));
    bool zero = true;
    for (const auto& c : r)
      if (!c.is_zero()) {
        zero = false;
        break;
      }
    if (!zero) reduced.push_back(std::move(r));
  }
  return rref(std::move(reduced)).rows;
}

}  // namespace solvmf
