#include "renner/char_table.hpp"

#include <algorithm>

namespace renner {

namespace {

// Beta-set encoding: beta_i = lam_i + (L - i), 1-based, L = #parts.
// Removing a border strip of size p means lowering one beta value by p onto
// an unoccupied slot; the sign is (-1)^{number of beta values crossed}.
Int mn_recurse(std::vector<int> lam, std::vector<int> mu,
               std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
  if (mu.empty()) return lam.empty() ? 1 : 0;
  if (lam.empty()) return 0;
  auto key = std::make_pair(lam, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int p = mu.front();
  std::vector<int> rest(mu.begin() + 1, mu.end());
  int L = static_cast<int>(lam.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);

  Int total = 0;
  for (int i = 0; i < L; ++i) {
    int target = beta[i] - p;
    if (target < 0) continue;
    bool occupied = false;
    int crossed = 0;
    for (int j = 0; j < L; ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++crossed;
    }
    if (occupied) continue;
    std::vector<int> nb(beta);
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> nlam;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) nlam.push_back(part);
    }
    Int sub = mn_recurse(nlam, rest, memo);
    total += (crossed % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

Int symmetric_character(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw ParseError("character and class must partition the same t");
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
  return mn_recurse(lam.parts, mu.parts, memo);
}

LabeledMatrix symmetric_group_table(int t) {
  std::vector<MunnIndex> labels;
  for (const Partition& p : enumerate_partitions(t)) labels.push_back(MunnIndex::Part(p));
  LabeledMatrix table(labels, labels);
  for (int i = 0; i < table.num_rows(); ++i)
    for (int j = 0; j < table.num_cols(); ++j)
      table.at(i, j) = QRat(Rat(symmetric_character(labels[j].lam, labels[i].lam)));
  return table;
}

BiPartition signed_type_on_block(const PartialPerm& w, const std::vector<int>& block) {
  std::vector<int> pts(block);
  std::sort(pts.begin(), pts.end());
  int s2 = static_cast<int>(pts.size());
  std::map<int, int> pos;
  for (int j = 0; j < s2; ++j) pos[pts[j]] = j + 1;
  std::vector<int> img(s2, 0);
  for (int j = 0; j < s2; ++j) {
    int target = w.apply(pts[j]);
    auto it = pos.find(target);
    if (it == pos.end()) throw ParseError("block not preserved by w");
    img[j] = it->second;
  }
  return signed_cycle_type(PartialPerm(std::move(img)));
}

Partition merge_bipartition(const BiPartition& b) {
  std::vector<int> parts(b.positive.parts);
  parts.insert(parts.end(), b.negative.parts.begin(), b.negative.parts.end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

Int hyperoctahedral_character(const BiPartition& chi, const PartialPerm& w,
                              const MonoidContext& ctx) {
  if (ctx.kind() != MonoidKind::Symplectic)
    throw ParseError("hyperoctahedral characters live in symplectic contexts");
  int n = ctx.n();
  int m = ctx.degree();
  if (chi.total_size() != n) throw ParseError("character label size mismatch");
  int k = chi.positive.size();
  int l = chi.negative.size();

  std::vector<int> first_block, middle_block;
  for (int i = 1; i <= k; ++i) {
    first_block.push_back(i);
    first_block.push_back(bar(i, m));
  }
  for (int i = k + 1; i <= n; ++i) {
    middle_block.push_back(i);
    middle_block.push_back(bar(i, m));
  }

  Rat total = 0;
  for (const PartialPerm& g : ctx.units()) {
    PartialPerm u = g * w * g.inverse();
    bool in_subgroup = true;
    for (int i = 1; i <= k && in_subgroup; ++i) {
      int v = u.apply(i);
      if (v > k && v <= m - k) in_subgroup = false;
    }
    if (!in_subgroup) continue;
    Int val = 1;
    if (k > 0) {
      BiPartition t1 = signed_type_on_block(u, first_block);
      val *= symmetric_character(chi.positive, merge_bipartition(t1));
    }
    if (l > 0) {
      BiPartition t2 = signed_type_on_block(u, middle_block);
      val *= symmetric_character(chi.negative, merge_bipartition(t2));
      if (t2.negative.num_parts() % 2 == 1) val = -val;
    }
    total += Rat(val);
  }
  Int subgroup_order = factorial(k) * factorial(l);
  for (int i = 0; i < k + l; ++i) subgroup_order *= 2;
  total /= Rat(subgroup_order);
  if (boost::multiprecision::denominator(total) != 1)
    throw DecompositionMismatch("induced character value is not an integer");
  return boost::multiprecision::numerator(total);
}

LabeledMatrix hyperoctahedral_table(int n) {
  const MonoidContext& ctx = MonoidContext::get(MonoidKind::Symplectic, n);
  std::vector<MunnIndex> labels;
  for (const BiPartition& b : enumerate_bipartitions(n)) labels.push_back(MunnIndex::Bip(b));
  LabeledMatrix table(labels, labels);
  for (int i = 0; i < table.num_rows(); ++i) {
    PartialPerm w = ctx.class_representative(labels[i]);
    for (int j = 0; j < table.num_cols(); ++j)
      table.at(i, j) = QRat(Rat(hyperoctahedral_character(labels[j].bip, w, ctx)));
  }
  return table;
}

LabeledMatrix assemble_Y(MonoidKind kind, int n) {
  QnOrder order = enumerate_qn(kind, n);
  LabeledMatrix y(order.labels, order.labels);
  auto place_block = [&y](const LabeledMatrix& block) {
    for (int i = 0; i < block.num_rows(); ++i)
      for (int j = 0; j < block.num_cols(); ++j)
        y.at(block.row_labels()[i], block.col_labels()[j]) = block.at(i, j);
  };
  if (kind == MonoidKind::Symplectic) place_block(hyperoctahedral_table(n));
  for (int t = n; t >= 0; --t) place_block(symmetric_group_table(t));
  return y;
}

CentralizerTable centralizer_orders(MonoidKind kind, int n) {
  const MonoidContext& ctx = MonoidContext::get(kind, n);
  CentralizerTable z;
  for (const MunnIndex& label : ctx.qn_order().labels) {
    if (label.is_bip()) {
      PartialPerm w = ctx.class_representative(label);
      Int count = 0;
      for (const PartialPerm& g : ctx.units())
        if (g * w == w * g) ++count;
      z[label] = count;
      continue;
    }
    int t = label.t;
    if (t <= 1) {
      z[label] = 1;
      continue;
    }
    const MonoidContext& sub = MonoidContext::get(MonoidKind::Rook, t);
    PartialPerm w = sub.class_representative(MunnIndex::Part(label.lam));
    Int count = 0;
    for (const PartialPerm& g : sub.units())
      if (g * w == w * g) ++count;
    z[label] = count;
  }
  return z;
}

}  // namespace renner
