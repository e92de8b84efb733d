#include "renner/hecke_table.hpp"

#include <algorithm>

#include "renner/errors.hpp"
#include "renner/monoid.hpp"
#include "renner/decomposition.hpp"
#include "renner/seminormal.hpp"

namespace renner {

namespace {

std::vector<MunnIndex> partition_labels(int t) {
  std::vector<MunnIndex> labels;
  for (const auto& p : enumerate_partitions(t))
    labels.push_back(MunnIndex::Part(p));
  return labels;
}

}  // namespace

HeckeTable hecke_symmetric_table(int t) {
  auto labels = partition_labels(t);
  LabeledMatrix table(labels, labels);
  if (t == 0) {
    table.at(0, 0) = QRat(1);
    return {table, "seminormal"};
  }
  const auto& ctx = MonoidContext::get(MonoidKind::Rook, t);
  std::vector<SeminormalRep> reps;
  for (const auto& label : labels)
    reps.push_back(SeminormalRep::symmetric(label.lam));
  for (int i = 0; i < table.num_rows(); ++i) {
    auto word = ctx.reduced_word(ctx.class_representative(labels[i]));
    for (int j = 0; j < table.num_cols(); ++j)
      table.at(i, j) = reps[j].trace_of_word(word);
  }
  return {table, "seminormal"};
}

HeckeTable starkey_symmetric_table(int t) {
  auto labels = partition_labels(t);
  LabeledMatrix table(labels, labels);
  for (int i = 0; i < table.num_rows(); ++i)
    for (int j = 0; j < table.num_cols(); ++j)
      table.at(i, j) = starkey_value(labels[j].lam, labels[i].lam);
  return {table, "starkey"};
}

HeckeTable hecke_hyperoctahedral_table(int n) {
  std::vector<MunnIndex> labels;
  for (const auto& b : enumerate_bipartitions(n))
    labels.push_back(MunnIndex::Bip(b));
  LabeledMatrix table(labels, labels);
  const auto& ctx = MonoidContext::get(MonoidKind::Symplectic, n);
  std::vector<SeminormalRep> reps;
  for (const auto& label : labels)
    reps.push_back(SeminormalRep::hyperoctahedral(label.bip));
  for (int i = 0; i < table.num_rows(); ++i) {
    auto word = ctx.reduced_word(ctx.class_representative(labels[i]));
    for (int j = 0; j < table.num_cols(); ++j)
      table.at(i, j) = reps[j].trace_of_word(word);
  }
  return {table, "seminormal"};
}

HeckeTable assemble_Yq(MonoidKind kind, int n) {
  auto order = enumerate_qn(kind, n);
  LabeledMatrix y(order.labels, order.labels);
  auto place_block = [&y](const LabeledMatrix& block) {
    for (int i = 0; i < block.num_rows(); ++i)
      for (int j = 0; j < block.num_cols(); ++j)
        y.at(block.row_labels()[i], block.col_labels()[j]) = block.at(i, j);
  };
  if (kind == MonoidKind::Symplectic)
    place_block(hecke_hyperoctahedral_table(n).table);
  for (int t = n; t >= 0; --t) place_block(hecke_symmetric_table(t).table);
  return {y, "seminormal"};
}

HeckeTable hecke_monoid_table(MonoidKind kind, int n) {
  LabeledMatrix mq = assemble_Yq(kind, n).table * b_matrix(kind, n);
  mq.require_polynomial_entries("M_q");
  return {mq, "product"};
}

HeckeTable hecke_a_matrix(MonoidKind kind, int n) {
  HeckeTable yq = assemble_Yq(kind, n);
  LabeledMatrix mq = hecke_monoid_table(kind, n).table;
  return {mq * yq.table.inverse(), "product"};
}

namespace {

void starkey_tuples(const Partition& lam, const std::vector<int>& mu_parts,
                    size_t idx, std::vector<int>& merged, const QRat& weight,
                    QRat& total) {
  if (idx == mu_parts.size()) {
    std::vector<int> type = merged;
    std::sort(type.begin(), type.end(), std::greater<int>());
    Int chi = symmetric_character(lam, Partition(type));
    if (chi != 0) total = total + weight * QRat(Rat(chi));
    return;
  }
  for (const Partition& nu : enumerate_partitions(mu_parts[idx])) {
    QPoly numer(1);
    for (int p : nu.parts) numer = numer * (QPoly::q_power(p) - QPoly(1));
    QPoly denom =
        (QPoly::q() - QPoly(1)) * QPoly(Rat(symmetric_centralizer(nu)));
    QRat next = weight * QRat(numer, denom);
    for (int p : nu.parts) merged.push_back(p);
    starkey_tuples(lam, mu_parts, idx + 1, merged, next, total);
    merged.resize(merged.size() - nu.parts.size());
  }
}

}  // namespace

QRat starkey_value(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw DefinitionMismatch("starkey_value needs |lam| = |mu|");
  QRat total(0);
  std::vector<int> merged;
  starkey_tuples(lam, mu.parts, 0, merged, QRat(1), total);
  return total;
}

TransitionCoefficients transition_coefficients(MonoidKind kind, int n) {
  LabeledMatrix m = monoid_table(kind, n).M;
  LabeledMatrix mq = hecke_monoid_table(kind, n).table;
  LabeledMatrix minv = m.inverse();
  const auto& labels = m.row_labels();

  TransitionCoefficients result;
  for (int i = 0; i < mq.num_rows(); ++i) {
    const MunnIndex& mu = labels[i];
    for (int g = 0; g < static_cast<int>(labels.size()); ++g) {
      QRat coeff(0);
      for (int k = 0; k < mq.num_cols(); ++k) {
        if (mq.at(i, k) == QRat(0)) continue;
        coeff = coeff + mq.at(i, k) * minv.at(k, g);
      }
      if (coeff == QRat(0)) continue;
      const MunnIndex& gamma = labels[g];
      bool same_block = mu.is_bip() ? gamma.is_bip()
                                    : (!gamma.is_bip() && gamma.t == mu.t);
      if (!same_block)
        throw SupportViolation("transition coefficient for class " +
                               mu.to_string() + " meets " + gamma.to_string() +
                               " outside its block");
      result.p[mu][gamma] = coeff;
    }
  }
  return result;
}

}  // namespace renner
