#include "renner/labeled_matrix.hpp"

#include <algorithm>

namespace renner {

LabeledMatrix::LabeledMatrix(std::vector<MunnIndex> rows, std::vector<MunnIndex> cols)
    : row_labels_(std::move(rows)), col_labels_(std::move(cols)) {
  entries_.assign(row_labels_.size(), std::vector<QRat>(col_labels_.size(), QRat(0)));
}

LabeledMatrix LabeledMatrix::identity(const std::vector<MunnIndex>& labels) {
  LabeledMatrix m(labels, labels);
  for (int i = 0; i < m.num_rows(); ++i) m.at(i, i) = QRat(1);
  return m;
}

LabeledMatrix LabeledMatrix::diagonal(const std::vector<MunnIndex>& labels,
                                      const std::vector<Rat>& values) {
  if (labels.size() != values.size()) throw ParseError("diagonal size mismatch");
  LabeledMatrix m(labels, labels);
  for (int i = 0; i < m.num_rows(); ++i) m.at(i, i) = QRat(values[i]);
  return m;
}

QRat& LabeledMatrix::at(int i, int j) {
  if (i < 0 || i >= num_rows() || j < 0 || j >= num_cols())
    throw ParseError("matrix index out of range");
  return entries_[i][j];
}

const QRat& LabeledMatrix::at(int i, int j) const {
  if (i < 0 || i >= num_rows() || j < 0 || j >= num_cols())
    throw ParseError("matrix index out of range");
  return entries_[i][j];
}

int LabeledMatrix::row_index(const MunnIndex& label) const {
  for (int i = 0; i < num_rows(); ++i)
    if (row_labels_[i] == label) return i;
  throw ParseError("row label " + label.to_string() + " not found");
}

int LabeledMatrix::col_index(const MunnIndex& label) const {
  for (int j = 0; j < num_cols(); ++j)
    if (col_labels_[j] == label) return j;
  throw ParseError("column label " + label.to_string() + " not found");
}

QRat& LabeledMatrix::at(const MunnIndex& row, const MunnIndex& col) {
  return entries_[row_index(row)][col_index(col)];
}

const QRat& LabeledMatrix::at(const MunnIndex& row, const MunnIndex& col) const {
  return entries_[row_index(row)][col_index(col)];
}

LabeledMatrix LabeledMatrix::operator*(const LabeledMatrix& o) const {
  if (num_cols() != o.num_rows()) throw ParseError("matrix product shape mismatch");
  LabeledMatrix result(row_labels_, o.col_labels_);
  for (int i = 0; i < num_rows(); ++i)
    for (int k = 0; k < num_cols(); ++k) {
      if (entries_[i][k].is_zero()) continue;
      for (int j = 0; j < o.num_cols(); ++j) {
        if (o.entries_[k][j].is_zero()) continue;
        result.entries_[i][j] = result.entries_[i][j] + entries_[i][k] * o.entries_[k][j];
      }
    }
  return result;
}

LabeledMatrix LabeledMatrix::operator+(const LabeledMatrix& o) const {
  if (num_rows() != o.num_rows() || num_cols() != o.num_cols())
    throw ParseError("matrix sum shape mismatch");
  LabeledMatrix result(row_labels_, col_labels_);
  for (int i = 0; i < num_rows(); ++i)
    for (int j = 0; j < num_cols(); ++j)
      result.entries_[i][j] = entries_[i][j] + o.entries_[i][j];
  return result;
}

LabeledMatrix LabeledMatrix::operator-(const LabeledMatrix& o) const {
  if (num_rows() != o.num_rows() || num_cols() != o.num_cols())
    throw ParseError("matrix difference shape mismatch");
  LabeledMatrix result(row_labels_, col_labels_);
  for (int i = 0; i < num_rows(); ++i)
    for (int j = 0; j < num_cols(); ++j)
      result.entries_[i][j] = entries_[i][j] - o.entries_[i][j];
  return result;
}

bool LabeledMatrix::operator==(const LabeledMatrix& o) const {
  if (row_labels_ != o.row_labels_ || col_labels_ != o.col_labels_) return false;
  for (int i = 0; i < num_rows(); ++i)
    for (int j = 0; j < num_cols(); ++j)
      if (!(entries_[i][j] == o.entries_[i][j])) return false;
  return true;
}

LabeledMatrix LabeledMatrix::transpose() const {
  LabeledMatrix result(col_labels_, row_labels_);
  for (int i = 0; i < num_rows(); ++i)
    for (int j = 0; j < num_cols(); ++j) result.entries_[j][i] = entries_[i][j];
  return result;
}

LabeledMatrix LabeledMatrix::inverse() const {
  if (num_rows() != num_cols()) throw ParseError("inverse of a non-square matrix");
  int n = num_rows();
  std::vector<std::vector<QRat>> work(entries_);
  LabeledMatrix inv = identity(row_labels_);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DivisionByZero("matrix is singular");
    std::swap(work[pivot], work[col]);
    std::swap(inv.entries_[pivot], inv.entries_[col]);
    QRat lead = work[col][col];
    for (int j = 0; j < n; ++j) {
      work[col][j] = work[col][j] / lead;
      inv.entries_[col][j] = inv.entries_[col][j] / lead;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col].is_zero()) continue;
      QRat factor = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] = work[r][j] - factor * work[col][j];
        inv.entries_[r][j] = inv.entries_[r][j] - factor * inv.entries_[col][j];
      }
    }
  }
  // Column labels of A^{-1} are the row labels of A and vice versa.
  LabeledMatrix result(col_labels_, row_labels_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) result.entries_[i][j] = inv.entries_[i][j];
  return result;
}

QRat LabeledMatrix::determinant() const {
  if (num_rows() != num_cols()) throw ParseError("determinant of a non-square matrix");
  int n = num_rows();
  std::vector<std::vector<QRat>> work(entries_);
  QRat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return QRat(0);
    if (pivot != col) {
      std::swap(work[pivot], work[col]);
      det = det * QRat(-1);
    }
    det = det * work[col][col];
    QRat lead = work[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (work[r][col].is_zero()) continue;
      QRat factor = work[r][col] / lead;
      for (int j = col; j < n; ++j) work[r][j] = work[r][j] - factor * work[col][j];
    }
  }
  return det;
}

LabeledMatrix LabeledMatrix::specialize(const Rat& value) const {
  LabeledMatrix result(row_labels_, col_labels_);
  for (int i = 0; i < num_rows(); ++i)
    for (int j = 0; j < num_cols(); ++j)
      result.entries_[i][j] = QRat(entries_[i][j].specialize(value));
  return result;
}

bool LabeledMatrix::is_integer_matrix() const {
  for (int i = 0; i < num_rows(); ++i)
    for (int j = 0; j < num_cols(); ++j) {
      const QRat& x = entries_[i][j];
      if (!x.is_polynomial()) return false;
      QPoly p = x.to_polynomial("is_integer_matrix");
      if (!p.is_constant()) return false;
      if (boost::multiprecision::denominator(p.constant_value()) != 1) return false;
    }
  return true;
}

void LabeledMatrix::require_polynomial_entries(const std::string& table_name) const {
  for (int i = 0; i < num_rows(); ++i)
    for (int j = 0; j < num_cols(); ++j)
      if (!entries_[i][j].is_polynomial())
        throw NonPolynomialEntry(table_name + " entry (" + row_labels_[i].to_string() +
                                 ", " + col_labels_[j].to_string() + ") = " +
                                 entries_[i][j].to_string());
}

}  // namespace renner
