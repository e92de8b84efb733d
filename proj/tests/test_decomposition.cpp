// Tests for the Solomon decomposition M = AY = YB of the monoid character
// table, its structural properties, the brute-force direct character
// evaluation, the verification helpers, and the curated reference tables.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "golden_data.hpp"
#include "renner/char_table.hpp"
#include "renner/decomposition.hpp"
#include "renner/errors.hpp"
#include "renner/monoid.hpp"
#include "renner/partition.hpp"
#include "renner/table_io.hpp"

using namespace renner;

namespace {

struct Instance {
  MonoidKind kind;
  int n;
};

const std::vector<Instance> kSmall = {{MonoidKind::Rook, 1},       {MonoidKind::Rook, 2},
                                      {MonoidKind::Rook, 3},       {MonoidKind::Symplectic, 1},
                                      {MonoidKind::Symplectic, 2}, {MonoidKind::Symplectic, 3}};

Int ival(const LabeledMatrix& m, int i, int j) {
  return boost::multiprecision::numerator(m.at(i, j).to_polynomial("test entry").constant_value());
}

}  // namespace

TEST_CASE("M factors as AY and YB with the assembled Y") {
  for (const Instance& inst : kSmall) {
    INFO(kind_to_string(inst.kind), " n=", inst.n);
    SolomonDecomposition d = monoid_table(inst.kind, inst.n);
    QnOrder order = enumerate_qn(inst.kind, inst.n);
    REQUIRE(d.M.num_rows() == static_cast<int>(order.labels.size()));
    for (int i = 0; i < d.M.num_rows(); ++i) {
      CHECK(d.M.row_labels()[i] == order.labels[i]);
      CHECK(d.M.col_labels()[i] == order.labels[i]);
    }
    CHECK(d.M == d.A * d.Y);
    CHECK(d.M == d.Y * d.B);
    CHECK(d.Y == assemble_Y(inst.kind, inst.n));
    CHECK(d.M.is_integer_matrix());
    CHECK(d.A.is_integer_matrix());
    CHECK(d.B.is_integer_matrix());
  }
}

TEST_CASE("B is unitriangular and A recovers from M by inverting Y") {
  for (const Instance& inst : kSmall) {
    INFO(kind_to_string(inst.kind), " n=", inst.n);
    SolomonDecomposition d = monoid_table(inst.kind, inst.n);
    for (int i = 0; i < d.B.num_rows(); ++i) {
      CHECK(ival(d.B, i, i) == 1);
      for (int j = 0; j < i; ++j) CHECK(d.B.at(i, j).is_zero());
    }
    CHECK_FALSE(d.M.determinant().is_zero());
  }
  SolomonDecomposition d = monoid_table(MonoidKind::Symplectic, 2);
  LabeledMatrix y_inv = d.Y.inverse();
  CHECK(d.A == d.M * y_inv);
  CHECK(d.B == y_inv * d.M);
}

TEST_CASE("identity-row of A counts idempotent-compatible units") {
  // Row of the identity class: 2^t * binom(n, t) over the columns (1^t),
  // plus 1 on the top class itself.
  SolomonDecomposition d = monoid_table(MonoidKind::Symplectic, 3);
  std::vector<long> want = {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 0, 0, 12, 0, 6, 1};
  REQUIRE(d.A.num_cols() == static_cast<int>(want.size()));
  for (int j = 0; j < d.A.num_cols(); ++j) {
    INFO("col ", d.A.col_labels()[j].to_string());
    CHECK(ival(d.A, 0, j) == Int(want[j]));
  }
}

TEST_CASE("direct character evaluation agrees with the table") {
  for (const Instance& inst : {Instance{MonoidKind::Rook, 1}, Instance{MonoidKind::Rook, 2},
                               Instance{MonoidKind::Rook, 3}, Instance{MonoidKind::Symplectic, 1},
                               Instance{MonoidKind::Symplectic, 2}}) {
    INFO(kind_to_string(inst.kind), " n=", inst.n);
    const MonoidContext& ctx = MonoidContext::get(inst.kind, inst.n);
    SolomonDecomposition d = monoid_table(inst.kind, inst.n);
    const std::vector<MunnIndex>& labels = d.M.row_labels();
    for (size_t i = 0; i < labels.size(); ++i) {
      PartialPerm rep = ctx.class_representative(labels[i]);
      for (size_t j = 0; j < labels.size(); ++j) {
        Int got = llc_character_oracle(labels[j], rep, ctx);
        INFO("class ", labels[i].to_string(), " character ", labels[j].to_string());
        CHECK(QRat(Rat(got)) == d.M.at(static_cast<int>(i), static_cast<int>(j)));
      }
    }
  }
}

TEST_CASE("verification helpers hold on small instances") {
  for (const Instance& inst : kSmall) {
    CheckResult group = verify_group_identity(inst.kind, inst.n);
    INFO(group.name, ": ", group.detail);
    CHECK(group.ok);
    CheckResult orth = verify_orthogonality(inst.kind, inst.n);
    INFO(orth.name, ": ", orth.detail);
    CHECK(orth.ok);
  }
  for (int n = 1; n <= 3; ++n) {
    CheckResult unit = verify_unit_restriction(n);
    INFO(unit.name, ": ", unit.detail);
    CHECK(unit.ok);
  }
  for (const Instance& inst : {Instance{MonoidKind::Rook, 1}, Instance{MonoidKind::Rook, 2},
                               Instance{MonoidKind::Rook, 3}, Instance{MonoidKind::Symplectic, 1},
                               Instance{MonoidKind::Symplectic, 2}}) {
    CheckResult rest = verify_restriction_multiplicities(inst.kind, inst.n);
    INFO(rest.name, ": ", rest.detail);
    CHECK(rest.ok);
  }
}

TEST_CASE("curated reference tables match the computed ones") {
  for (const char* text : {golden::k_rsp6_A, golden::k_rsp6_B, golden::k_rsp6_Y, golden::k_rsp6_M,
                           golden::k_rsp4_B}) {
    TableArtifact want = artifact_from_json(text);
    TableArtifact got = compute_table(want.kind, want.n, want.table_kind);
    std::vector<std::string> diffs = table_differences(got.table, want.table);
    for (const std::string& diff : diffs) { INFO(diff); CHECK(false); }
    CHECK(diffs.empty());
    CHECK(got.order_version == want.order_version);
  }
}

TEST_CASE("size guards on the table builders") {
  CHECK_THROWS_AS(monoid_table(MonoidKind::Symplectic, 5), UnsupportedSize);
  CHECK_THROWS_AS(MonoidContext::get(MonoidKind::Rook, 8), UnsupportedSize);
  CHECK_THROWS_AS(compute_table(MonoidKind::Rook, 7, "M"), UnsupportedSize);
  CHECK_THROWS_AS(compute_table(MonoidKind::Symplectic, 5, "Y"), UnsupportedSize);
}
