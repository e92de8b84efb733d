#include "renner/seminormal.hpp"

#include <map>
#include <tuple>

#include "renner/errors.hpp"

namespace renner {

namespace {

struct Cell {
  int comp;
  int row;
  int col;
  bool operator<(const Cell& o) const {
    return std::tie(comp, row, col) < std::tie(o.comp, o.row, o.col);
  }
  bool operator==(const Cell& o) const {
    return comp == o.comp && row == o.row && col == o.col;
  }
};

// entry k sits at cell tab[k-1]
using Tableau = std::vector<Cell>;

void grow(const std::vector<std::vector<int>>& shape, int total,
          std::vector<std::vector<int>>& filled, Tableau& acc,
          std::vector<Tableau>& out) {
  int k = static_cast<int>(acc.size());
  if (k == total) {
    out.push_back(acc);
    return;
  }
  for (int c = 0; c < static_cast<int>(shape.size()); ++c) {
    for (int r = 0; r < static_cast<int>(shape[c].size()); ++r) {
      int len = filled[c][r];
      if (len >= shape[c][r]) continue;
      if (r > 0 && filled[c][r - 1] <= len) continue;
      acc.push_back({c, r, len});
      ++filled[c][r];
      grow(shape, total, filled, acc, out);
      --filled[c][r];
      acc.pop_back();
    }
  }
}

std::vector<Tableau> standard_tableaux(
    const std::vector<std::vector<int>>& shape, int total) {
  std::vector<std::vector<int>> filled;
  for (const auto& comp : shape) filled.emplace_back(comp.size(), 0);
  Tableau acc;
  std::vector<Tableau> out;
  grow(shape, total, filled, acc, out);
  return out;
}

// res(S, k) = sign * q^{exponent}; u_1 = q contributes +1 to the exponent of
// component 0 when two components are present, u_2 = -1 contributes the sign.
void residue(const Cell& cell, bool two_components, int* sign, int* exponent) {
  *exponent = cell.col - cell.row;
  *sign = 1;
  if (two_components) {
    if (cell.comp == 0) {
      *exponent += 1;
    } else {
      *sign = -1;
    }
  }
}

QRat q_shift(int exponent) {
  if (exponent >= 0) return QRat(QPoly::q_power(exponent));
  return QRat(QPoly(1), QPoly::q_power(-exponent));
}

std::vector<std::vector<QRat>> transposition_matrix(
    const std::vector<Tableau>& basis, int i, bool two_components) {
  int dim = static_cast<int>(basis.size());
  std::map<Tableau, int> index;
  for (int s = 0; s < dim; ++s) index[basis[s]] = s;

  std::vector<std::vector<QRat>> mat(dim, std::vector<QRat>(dim, QRat(0)));
  const QRat q_minus_one(QPoly::q() - QPoly(1));
  for (int s = 0; s < dim; ++s) {
    const Cell& lo = basis[s][i - 1];
    const Cell& hi = basis[s][i];
    int sign_lo = 0, exp_lo = 0, sign_hi = 0, exp_hi = 0;
    residue(lo, two_components, &sign_lo, &exp_lo);
    residue(hi, two_components, &sign_hi, &exp_hi);
    QRat rho = q_shift(exp_lo - exp_hi);
    if (sign_lo != sign_hi) rho = -rho;
    QRat a = q_minus_one / (QRat(1) - rho);
    mat[s][s] = a;

    bool swap_standard =
        lo.comp != hi.comp || (lo.row != hi.row && lo.col != hi.col);
    if (!swap_standard) continue;
    Tableau swapped = basis[s];
    std::swap(swapped[i - 1], swapped[i]);
    auto it = index.find(swapped);
    if (it == index.end())
      throw DefinitionMismatch("tableau swap left the standard basis");
    mat[it->second][s] = QRat(1) + a;
  }
  return mat;
}

}  // namespace

SeminormalRep SeminormalRep::symmetric(const Partition& lam) {
  std::vector<std::vector<int>> shape = {lam.parts};
  int t = lam.size();
  auto basis = standard_tableaux(shape, t);
  SeminormalRep rep;
  rep.dim_ = static_cast<int>(basis.size());
  for (int i = 1; i < t; ++i)
    rep.mats_.push_back(transposition_matrix(basis, i, false));
  return rep;
}

SeminormalRep SeminormalRep::hyperoctahedral(const BiPartition& chi) {
  std::vector<std::vector<int>> shape = {chi.positive.parts,
                                         chi.negative.parts};
  int n = chi.positive.size() + chi.negative.size();
  auto basis = standard_tableaux(shape, n);
  SeminormalRep rep;
  rep.dim_ = static_cast<int>(basis.size());

  std::vector<std::vector<QRat>> t0(rep.dim_,
                                    std::vector<QRat>(rep.dim_, QRat(0)));
  for (int s = 0; s < rep.dim_; ++s)
    t0[s][s] = basis[s][0].comp == 0 ? QRat(QPoly::q()) : QRat(-1);
  rep.mats_.push_back(std::move(t0));

  for (int i = 1; i < n; ++i)
    rep.mats_.push_back(transposition_matrix(basis, i, true));
  return rep;
}

const std::vector<std::vector<QRat>>& SeminormalRep::matrix(int gen) const {
  if (gen < 0 || gen >= static_cast<int>(mats_.size()))
    throw ParseError("generator index out of range");
  return mats_[gen];
}

QRat SeminormalRep::trace_of_word(const std::vector<int>& word) const {
  if (word.empty()) return QRat(dim_);
  std::vector<std::vector<QRat>> prod = matrix(word[0]);
  for (size_t k = 1; k < word.size(); ++k) {
    const auto& m = matrix(word[k]);
    std::vector<std::vector<QRat>> next(dim_,
                                        std::vector<QRat>(dim_, QRat(0)));
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        if (prod[r][c] == QRat(0)) continue;
        for (int j = 0; j < dim_; ++j) {
          if (m[c][j] == QRat(0)) continue;
          next[r][j] = next[r][j] + prod[r][c] * m[c][j];
        }
      }
    prod = std::move(next);
  }
  QRat tr(0);
  for (int s = 0; s < dim_; ++s) tr = tr + prod[s][s];
  return tr;
}

}  // namespace renner
