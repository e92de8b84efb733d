#ifndef RENNER_LABELED_MATRIX_HPP
#define RENNER_LABELED_MATRIX_HPP

#include <string>
#include <vector>

#include "renner/partition.hpp"
#include "renner/qpoly.hpp"

namespace renner {

// Dense matrix over QRat whose rows and columns carry class/character labels.
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  LabeledMatrix(std::vector<MunnIndex> rows, std::vector<MunnIndex> cols);
  static LabeledMatrix identity(const std::vector<MunnIndex>& labels);
  static LabeledMatrix diagonal(const std::vector<MunnIndex>& labels,
                                const std::vector<Rat>& values);

  int num_rows() const { return static_cast<int>(row_labels_.size()); }
  int num_cols() const { return static_cast<int>(col_labels_.size()); }
  const std::vector<MunnIndex>& row_labels() const { return row_labels_; }
  const std::vector<MunnIndex>& col_labels() const { return col_labels_; }

  QRat& at(int i, int j);
  const QRat& at(int i, int j) const;
  QRat& at(const MunnIndex& row, const MunnIndex& col);
  const QRat& at(const MunnIndex& row, const MunnIndex& col) const;
  int row_index(const MunnIndex& label) const;  // throws ParseError if absent
  int col_index(const MunnIndex& label) const;

  LabeledMatrix operator*(const LabeledMatrix& o) const;
  LabeledMatrix operator+(const LabeledMatrix& o) const;
  LabeledMatrix operator-(const LabeledMatrix& o) const;
  bool operator==(const LabeledMatrix& o) const;  // labels and entries
  bool operator!=(const LabeledMatrix& o) const { return !(*this == o); }

  LabeledMatrix transpose() const;
  // Inverse by Gaussian elimination over the rational-function field.
  LabeledMatrix inverse() const;
  QRat determinant() const;

  // Entrywise evaluation at q = value; keeps labels.
  LabeledMatrix specialize(const Rat& value) const;
  // True when every entry is a constant integer.
  bool is_integer_matrix() const;
  // True when every entry clears to a polynomial (integer coefficients not
  // required); throws where() context via NonPolynomialEntry otherwise.
  void require_polynomial_entries(const std::string& table_name) const;

 private:
  std::vector<MunnIndex> row_labels_;
  std::vector<MunnIndex> col_labels_;
  std::vector<std::vector<QRat>> entries_;
};

}  // namespace renner

#endif
