// Tests for the generic Hecke algebra character tables: seminormal matrix
// representations, the Starkey cross-route, the q-deformed monoid table
// M_q = Y_q . B, transition coefficients, and the curated reference tables.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "golden_data.hpp"
#include "renner/char_table.hpp"
#include "renner/decomposition.hpp"
#include "renner/errors.hpp"
#include "renner/hecke_table.hpp"
#include "renner/monoid.hpp"
#include "renner/partition.hpp"
#include "renner/seminormal.hpp"
#include "renner/table_io.hpp"

using namespace renner;

namespace {

using Mat = std::vector<std::vector<QRat>>;

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size();
  Mat out(n, std::vector<QRat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

Mat mat_shift(const Mat& a, const QRat& scalar) {  // a + scalar * I
  Mat out(a);
  for (size_t i = 0; i < a.size(); ++i) out[i][i] = out[i][i] + scalar;
  return out;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    for (const QRat& v : row)
      if (!v.is_zero()) return false;
  return true;
}

bool mat_eq(const Mat& a, const Mat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

// Quadratic (T - q)(T + 1) = 0 for every generator, the adjacent braid
// relations, and commutation of distant generators. `long_braid_pair` adds a
// length-four braid check between generators 0 and 1.
void check_relations(const SeminormalRep& rep, bool long_braid_pair) {
  QRat q = QRat(QPoly::q());
  int g = rep.num_generators();
  for (int i = 0; i < g; ++i) {
    const Mat& t = rep.matrix(i);
    CHECK(mat_is_zero(mat_mul(mat_shift(t, q * QRat(-1)), mat_shift(t, QRat(1)))));
  }
  int first_adjacent = long_braid_pair ? 1 : 0;
  for (int i = first_adjacent; i + 1 < g; ++i) {
    const Mat& a = rep.matrix(i);
    const Mat& b = rep.matrix(i + 1);
    CHECK(mat_eq(mat_mul(mat_mul(a, b), a), mat_mul(mat_mul(b, a), b)));
  }
  if (long_braid_pair && g >= 2) {
    const Mat& a = rep.matrix(0);
    const Mat& b = rep.matrix(1);
    CHECK(mat_eq(mat_mul(mat_mul(mat_mul(a, b), a), b), mat_mul(mat_mul(mat_mul(b, a), b), a)));
  }
  for (int i = 0; i < g; ++i)
    for (int j = i + 2; j < g; ++j) {
      const Mat& a = rep.matrix(i);
      const Mat& b = rep.matrix(j);
      CHECK(mat_eq(mat_mul(a, b), mat_mul(b, a)));
    }
}

long dim_formula_symmetric(const Partition& lam) {
  Int d = symmetric_character(lam, Partition(std::vector<int>(lam.size(), 1)));
  return static_cast<long>(d);
}

}  // namespace

TEST_CASE("seminormal representations satisfy the defining relations") {
  for (int t = 0; t <= 4; ++t)
    for (const Partition& lam : enumerate_partitions(t))
      check_relations(SeminormalRep::symmetric(lam), false);
  for (int n = 1; n <= 3; ++n)
    for (const BiPartition& chi : enumerate_bipartitions(n))
      check_relations(SeminormalRep::hyperoctahedral(chi), true);
}

TEST_CASE("seminormal dimensions") {
  CHECK(SeminormalRep::symmetric(P({})).dimension() == 1);
  CHECK(SeminormalRep::symmetric(P({2, 1})).dimension() == 2);
  CHECK(SeminormalRep::symmetric(P({3, 1})).dimension() == 3);
  CHECK(SeminormalRep::symmetric(P({2, 2})).dimension() == 2);
  CHECK(SeminormalRep::symmetric(P({2, 1, 1})).dimension() == 3);
  CHECK(SeminormalRep::symmetric(P({1, 1, 1, 1})).dimension() == 1);
  for (int t = 0; t <= 4; ++t)
    for (const Partition& lam : enumerate_partitions(t))
      CHECK(SeminormalRep::symmetric(lam).dimension() == dim_formula_symmetric(lam));
  // dim(lam, mu) = binom(n, |lam|) * f^lam * f^mu.
  for (int n = 1; n <= 3; ++n)
    for (const BiPartition& chi : enumerate_bipartitions(n)) {
      long want = static_cast<long>(binomial(n, chi.positive.size())) *
                  dim_formula_symmetric(chi.positive) * dim_formula_symmetric(chi.negative);
      CHECK(SeminormalRep::hyperoctahedral(chi).dimension() == want);
    }
}

TEST_CASE("seminormal and Starkey routes agree for the symmetric type") {
  for (int t = 0; t <= 4; ++t) {
    HeckeTable semi = hecke_symmetric_table(t);
    HeckeTable starkey = starkey_symmetric_table(t);
    CHECK(semi.provenance == "seminormal");
    CHECK(starkey.provenance == "starkey");
    INFO("t=", t);
    CHECK(semi.table == starkey.table);
  }
}

TEST_CASE("q = 1 recovers the ordinary tables") {
  for (int t = 0; t <= 4; ++t)
    CHECK(hecke_symmetric_table(t).table.specialize(1) == symmetric_group_table(t));
  for (int n = 1; n <= 3; ++n)
    CHECK(hecke_hyperoctahedral_table(n).table.specialize(1) == hyperoctahedral_table(n));
  for (MonoidKind kind : {MonoidKind::Rook, MonoidKind::Symplectic}) {
    int top = kind == MonoidKind::Rook ? 3 : 2;
    for (int n = 1; n <= top; ++n) {
      INFO(kind_to_string(kind), " n=", n);
      CHECK(hecke_monoid_table(kind, n).table.specialize(1) == monoid_table(kind, n).M);
    }
  }
}

TEST_CASE("one-dimensional columns of the symmetric Hecke table") {
  // The minimal-length class representative of mu has length
  // |mu| - (number of parts); the index character sends T_w to q^l(w) and
  // the sign character to (-1)^l(w).
  for (int t = 1; t <= 4; ++t) {
    HeckeTable h = hecke_symmetric_table(t);
    MunnIndex index_col = MunnIndex::Part(P({}));
    std::vector<int> trivial(1, t), sign_parts(t, 1);
    MunnIndex triv = MunnIndex::Part(Partition(std::vector<int>(trivial)));
    MunnIndex sgn = MunnIndex::Part(Partition(std::vector<int>(sign_parts)));
    for (const MunnIndex& mu : h.table.row_labels()) {
      int len = t - mu.lam.num_parts();
      CHECK(h.table.at(mu, triv) == QRat(QPoly::q_power(len)));
      CHECK(h.table.at(mu, sgn) == QRat(Rat(len % 2 ? -1 : 1)));
    }
  }
}

TEST_CASE("Hecke monoid table structure") {
  for (MonoidKind kind : {MonoidKind::Rook, MonoidKind::Symplectic}) {
    int top = kind == MonoidKind::Rook ? 3 : 2;
    for (int n = 1; n <= top; ++n) {
      INFO(kind_to_string(kind), " n=", n);
      const MonoidContext& ctx = MonoidContext::get(kind, n);
      SolomonDecomposition d = monoid_table(kind, n);
      HeckeTable yq = assemble_Yq(kind, n);
      HeckeTable mq = hecke_monoid_table(kind, n);
      CHECK(mq.provenance == "product");
      CHECK(mq.table == yq.table * d.B);
      CHECK(yq.table.inverse() * mq.table == d.B);

      MunnIndex zero_col = MunnIndex::Part(P({}));
      auto label_rank = [&](const MunnIndex& label) { return label.is_bip() ? n : label.t; };
      for (const MunnIndex& mu : mq.table.row_labels()) {
        PartialPerm rep = ctx.class_representative(mu);
        int len = ctx.monoid_length(rep);
        // Constant-term column: the one-dimensional character T_r -> q^l(r).
        CHECK(mq.table.at(mu, zero_col) == QRat(QPoly::q_power(len)));
        for (const MunnIndex& lam : mq.table.col_labels()) {
          const QRat& entry = mq.table.at(mu, lam);
          CHECK(entry.to_polynomial("Mq entry").degree() <= len);
          if (label_rank(lam) > label_rank(mu)) CHECK(entry.is_zero());
        }
      }
    }
  }
}

TEST_CASE("transition coefficients expand Hecke rows over classical rows") {
  // Hand-derived pins for the rook monoid: mu = (2) at n = 2 and mu = (3)
  // at n = 3 (weights of the three partitions refining a full cycle).
  TransitionCoefficients t2 = transition_coefficients(MonoidKind::Rook, 2);
  MunnIndex mu2 = MunnIndex::Part(P({2}));
  CHECK(t2.p.at(mu2).at(MunnIndex::Part(P({1, 1}))) == QRat::parse("(q-1)/2"));
  CHECK(t2.p.at(mu2).at(MunnIndex::Part(P({2}))) == QRat::parse("(q+1)/2"));

  // The identity class has the trivial expansion.
  MunnIndex id2 = MunnIndex::Part(P({1, 1}));
  CHECK(t2.p.at(id2).at(id2) == QRat(Rat(1)));
  for (const auto& [gamma, value] : t2.p.at(id2))
    if (gamma != id2) CHECK(value.is_zero());

  TransitionCoefficients t3 = transition_coefficients(MonoidKind::Rook, 3);
  MunnIndex mu3 = MunnIndex::Part(P({3}));
  CHECK(t3.p.at(mu3).at(MunnIndex::Part(P({1, 1, 1}))) == QRat::parse("(q^2-2q+1)/6"));
  CHECK(t3.p.at(mu3).at(MunnIndex::Part(P({2, 1}))) == QRat::parse("(q^2-1)/2"));
  CHECK(t3.p.at(mu3).at(MunnIndex::Part(P({3}))) == QRat::parse("(q^2+q+1)/3"));

  // Row reconstruction and block-confined support.
  for (MonoidKind kind : {MonoidKind::Rook, MonoidKind::Symplectic}) {
    int top = kind == MonoidKind::Rook ? 3 : 2;
    for (int n = 1; n <= top; ++n) {
      INFO(kind_to_string(kind), " n=", n);
      SolomonDecomposition d = monoid_table(kind, n);
      HeckeTable mq = hecke_monoid_table(kind, n);
      TransitionCoefficients tc = transition_coefficients(kind, n);
      for (const MunnIndex& mu : mq.table.row_labels()) {
        const auto& row = tc.p.at(mu);
        for (const auto& [gamma, weight] : row) {
          if (weight.is_zero()) continue;
          CHECK(gamma.is_bip() == mu.is_bip());
          if (!gamma.is_bip()) CHECK(gamma.t == mu.t);
        }
        for (const MunnIndex& lam : mq.table.col_labels()) {
          QRat acc;
          for (const auto& [gamma, weight] : row) acc = acc + weight * d.M.at(gamma, lam);
          CHECK(acc == mq.table.at(mu, lam));
        }
      }
    }
  }
}

TEST_CASE("Starkey class-sum values") {
  CHECK(starkey_value(P({1, 1}), P({2})) == QRat(Rat(-1)));
  CHECK(starkey_value(P({2}), P({2})) == QRat(QPoly::q()));
  for (int t = 0; t <= 4; ++t) {
    Partition ones(std::vector<int>(t, 1));
    for (const Partition& lam : enumerate_partitions(t))
      CHECK(starkey_value(lam, ones) == QRat(Rat(dim_formula_symmetric(lam))));
  }
  CHECK_THROWS_AS(starkey_value(P({2}), P({1, 1, 1})), DefinitionMismatch);
}

TEST_CASE("curated reference Hecke tables match the computed ones") {
  for (const char* text : {golden::k_rsp4_Yq, golden::k_rsp4_Mq, golden::k_r2_Mq, golden::k_r2_Aq}) {
    TableArtifact want = artifact_from_json(text);
    TableArtifact got = compute_table(want.kind, want.n, want.table_kind);
    std::vector<std::string> diffs = table_differences(got.table, want.table);
    for (const std::string& diff : diffs) { INFO(diff); CHECK(false); }
    CHECK(diffs.empty());
  }
}

TEST_CASE("Hecke table size guards") {
  CHECK_THROWS_AS(compute_table(MonoidKind::Rook, 5, "Mq"), UnsupportedSize);
  CHECK_THROWS_AS(compute_table(MonoidKind::Symplectic, 4, "Yq"), UnsupportedSize);
  CHECK_THROWS_AS(compute_table(MonoidKind::Symplectic, 4, "Aq"), UnsupportedSize);
}
