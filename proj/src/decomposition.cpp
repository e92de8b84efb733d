#include "renner/decomposition.hpp"

#include <sstream>

namespace renner {

LabeledMatrix a_matrix(MonoidKind kind, int n) {
  QnOrder order = enumerate_qn(kind, n);
  LabeledMatrix a(order.labels, order.labels);
  for (int i = 0; i < a.num_rows(); ++i) {
    const MunnIndex& row = order.labels[i];
    for (int j = 0; j < a.num_cols(); ++j) {
      const MunnIndex& col = order.labels[j];
      if (row.is_bip() && col.is_bip()) {
        a.at(i, j) = QRat(Rat(row == col ? 1 : 0));
      } else if (row.is_bip()) {
        Int scale = 1;
        for (int p = 0; p < col.lam.num_parts(); ++p) scale *= 2;
        a.at(i, j) = QRat(Rat(scale * multiplicity_binomial(row.bip.positive, col.lam)));
      } else if (col.is_bip()) {
        a.at(i, j) = QRat(0);
      } else {
        a.at(i, j) = QRat(Rat(multiplicity_binomial(row.lam, col.lam)));
      }
    }
  }
  return a;
}

LabeledMatrix b_matrix(MonoidKind kind, int n) {
  QnOrder order = enumerate_qn(kind, n);
  LabeledMatrix b(order.labels, order.labels);
  for (int i = 0; i < b.num_rows(); ++i) {
    const MunnIndex& row = order.labels[i];
    for (int j = 0; j < b.num_cols(); ++j) {
      const MunnIndex& col = order.labels[j];
      if (row.is_bip() && col.is_bip()) {
        b.at(i, j) = QRat(Rat(row == col ? 1 : 0));
      } else if (row.is_bip()) {
        // Peel a horizontal strip of size n-t off gamma, then pair the rest
        // with delta through a Littlewood-Richardson coefficient.
        const Partition& gamma = row.bip.positive;
        const Partition& delta = row.bip.negative;
        int strip = n - col.t;
        Int total = 0;
        if (gamma.size() >= strip) {
          for (const Partition& lam : enumerate_partitions(gamma.size() - strip))
            if (is_horizontal_strip(gamma, lam))
              total += lr_coefficient(lam, delta, col.lam);
        }
        b.at(i, j) = QRat(Rat(total));
      } else if (col.is_bip()) {
        b.at(i, j) = QRat(0);
      } else {
        b.at(i, j) = QRat(Rat(is_horizontal_strip(row.lam, col.lam) ? 1 : 0));
      }
    }
  }
  return b;
}

SolomonDecomposition monoid_table(MonoidKind kind, int n) {
  SolomonDecomposition d;
  d.A = a_matrix(kind, n);
  d.B = b_matrix(kind, n);
  d.Y = assemble_Y(kind, n);
  d.M = d.A * d.Y;
  LabeledMatrix yb = d.Y * d.B;
  if (!(d.M == yb))
    throw DecompositionMismatch("A*Y and Y*B disagree for " + kind_to_string(kind) +
                                " n=" + std::to_string(n));
  return d;
}

Int llc_character_oracle(const MunnIndex& lam, const PartialPerm& sigma,
                         const MonoidContext& ctx) {
  if (!ctx.contains(sigma)) throw NotInMonoid("oracle argument " + sigma.to_string());
  if (lam.is_bip()) {
    if (!sigma.is_total()) return 0;
    return hyperoctahedral_character(lam.bip, sigma, ctx);
  }
  Int total = 0;
  for (const auto& K : cycle_sets(sigma, lam.t, ctx.admissibility_needed()))
    total += symmetric_character(lam.lam, restricted_cycle_type(sigma, K));
  return total;
}

namespace {

CheckResult matrix_equal_check(const std::string& name, const LabeledMatrix& lhs,
                               const LabeledMatrix& rhs) {
  CheckResult res;
  res.name = name;
  res.ok = lhs == rhs;
  if (!res.ok) {
    std::ostringstream os;
    for (int i = 0; i < lhs.num_rows() && os.tellp() < 400; ++i)
      for (int j = 0; j < lhs.num_cols(); ++j)
        if (!(lhs.at(i, j) == rhs.at(i, j)))
          os << "(" << lhs.row_labels()[i].to_string() << ","
             << lhs.col_labels()[j].to_string() << "): " << lhs.at(i, j).to_string()
             << " vs " << rhs.at(i, j).to_string() << "; ";
    res.detail = os.str();
  }
  return res;
}

}  // namespace

CheckResult verify_group_identity(MonoidKind kind, int n) {
  SolomonDecomposition d = monoid_table(kind, n);
  CentralizerTable z = centralizer_orders(kind, n);
  std::vector<Rat> inv_z;
  for (const MunnIndex& label : d.Y.row_labels()) inv_z.push_back(Rat(1) / Rat(z.at(label)));
  LabeledMatrix winv = LabeledMatrix::diagonal(d.Y.row_labels(), inv_z);
  LabeledMatrix lhs = d.Y.transpose() * winv * d.A * d.Y;
  return matrix_equal_check(
      "B = Y^T diag(z)^{-1} A Y (" + kind_to_string(kind) + ", n=" + std::to_string(n) + ")",
      lhs, d.B);
}

CheckResult verify_orthogonality(MonoidKind kind, int n) {
  LabeledMatrix y = assemble_Y(kind, n);
  CentralizerTable z = centralizer_orders(kind, n);
  std::vector<Rat> zvals;
  for (const MunnIndex& label : y.row_labels()) zvals.push_back(Rat(z.at(label)));
  LabeledMatrix diag = LabeledMatrix::diagonal(y.row_labels(), zvals);
  return matrix_equal_check(
      "Y Y^T = diag(z) (" + kind_to_string(kind) + ", n=" + std::to_string(n) + ")",
      y * y.transpose(), diag);
}

CheckResult verify_unit_restriction(int n) {
  const MonoidContext& ctx = MonoidContext::get(MonoidKind::Symplectic, n);
  CheckResult res;
  res.name = "unit restriction of partition characters (symplectic, n=" +
             std::to_string(n) + ")";
  res.ok = true;
  for (int t = 0; t <= n; ++t) {
    Int weight = factorial(t) * factorial(n - t);
    for (int i = 0; i < n - t; ++i) weight *= 2;
    for (const Partition& lam : enumerate_partitions(t)) {
      MunnIndex label = MunnIndex::Part(lam);
      for (const PartialPerm& w : ctx.units()) {
        // Induction from S_t x W_{n-t}: S_t permutes {1..t} without bars.
        Rat total = 0;
        for (const PartialPerm& g : ctx.units()) {
          PartialPerm u = g * w * g.inverse();
          bool in_subgroup = true;
          for (int x = 1; x <= t && in_subgroup; ++x)
            if (u.apply(x) > t) in_subgroup = false;
          if (!in_subgroup) continue;
          if (t == 0) {
            total += 1;
            continue;
          }
          std::vector<int> K;
          for (int x = 1; x <= t; ++x) K.push_back(x);
          total += Rat(symmetric_character(lam, restricted_cycle_type(u, K)));
        }
        total /= Rat(weight);
        if (total != Rat(llc_character_oracle(label, w, ctx))) {
          res.ok = false;
          res.detail += label.to_string() + " at " + w.to_string() + "; ";
        }
      }
    }
  }
  return res;
}

CheckResult verify_restriction_multiplicities(MonoidKind kind, int n) {
  const MonoidContext& ctx = MonoidContext::get(kind, n);
  LabeledMatrix b = b_matrix(kind, n);
  CheckResult res;
  res.name = "B entries are restriction multiplicities (" + kind_to_string(kind) +
             ", n=" + std::to_string(n) + ")";
  res.ok = true;
  for (const MunnIndex& nu : b.row_labels()) {
    for (const MunnIndex& mu : b.col_labels()) {
      Rat inner = 0;
      if (nu.is_bip()) {
        // <Res_W chi_mu, chi_nu> over the full unit group.
        for (const PartialPerm& w : ctx.units()) {
          Int lhs = llc_character_oracle(mu, w, ctx);
          Int rhs = hyperoctahedral_character(nu.bip, w, ctx);
          inner += Rat(lhs * rhs);
        }
        inner /= Rat(ctx.units().size());
      } else {
        // <Res chi_mu, chi_nu> over S_s acting by rank-s partial perms.
        int s = nu.t;
        if (s == 0) {
          inner = Rat(llc_character_oracle(mu, PartialPerm::zero(ctx.degree()), ctx));
        } else {
          const MonoidContext& sub = MonoidContext::get(MonoidKind::Rook, s);
          for (const PartialPerm& w : sub.units()) {
            std::vector<int> img(ctx.degree(), 0);
            for (int x = 1; x <= s; ++x) img[x - 1] = w.apply(x);
            PartialPerm embedded(std::move(img));
            Int lhs = llc_character_oracle(mu, embedded, ctx);
            Int rhs = symmetric_character(nu.lam, cycle_type(w));
            inner += Rat(lhs * rhs);
          }
          inner /= Rat(factorial(s));
        }
      }
      if (QRat(inner) != b.at(nu, mu)) {
        res.ok = false;
        res.detail += "(" + nu.to_string() + "," + mu.to_string() + "): got " +
                      rat_to_string(inner) + " want " + b.at(nu, mu).to_string() + "; ";
      }
    }
  }
  return res;
}

}  // namespace renner
