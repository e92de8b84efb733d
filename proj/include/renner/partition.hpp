#ifndef RENNER_PARTITION_HPP
#define RENNER_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "renner/errors.hpp"
#include "renner/qpoly.hpp"

namespace renner {

enum class MonoidKind { Rook, Symplectic };

std::string kind_to_string(MonoidKind k);
MonoidKind kind_from_string(const std::string& s);

// Weakly decreasing positive parts; empty = the partition of 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int num_parts() const { return static_cast<int>(parts.size()); }
  // lambda_(i): the number of parts equal to i.
  int multiplicity(int i) const;
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  bool contains(const Partition& mu) const;  // componentwise
  // Inner label text: "1^3", "21", "0" for empty.
  std::string inner_string() const;
  static Partition parse_inner(const std::string& s);

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// (positive cycle type, negative cycle type), |gamma|+|delta| = n.
struct BiPartition {
  Partition positive;  // gamma
  Partition negative;  // delta

  int total_size() const { return positive.size() + negative.size(); }
  bool operator==(const BiPartition& o) const {
    return positive == o.positive && negative == o.negative;
  }
  bool operator!=(const BiPartition& o) const { return !(*this == o); }
  bool operator<(const BiPartition& o) const {
    if (positive != o.positive) return positive < o.positive;
    return negative < o.negative;
  }
};

// Row/column label of the monoid character table: either a bipartition
// (full-rank block, symplectic only) or a partition of some rank t <= n.
struct MunnIndex {
  enum class Tag { Bip, Part };
  Tag tag = Tag::Part;
  BiPartition bip;  // valid when tag == Bip
  int t = 0;        // valid when tag == Part
  Partition lam;    // valid when tag == Part, |lam| = t

  static MunnIndex Bip(BiPartition b);
  static MunnIndex Part(const Partition& lam);

  bool is_bip() const { return tag == Tag::Bip; }
  // Rank of the attached idempotent: n for Bip (handled by context), t for Part.
  std::string to_string() const;  // "(21,0)" / "(1^2)" / "(0)"
  static MunnIndex parse(const std::string& s);

  bool operator==(const MunnIndex& o) const;
  bool operator!=(const MunnIndex& o) const { return !(*this == o); }
  bool operator<(const MunnIndex& o) const;
};

// The fixed total order on Q_n. Bip block first (symplectic), then the
// P_t blocks for t = n down to 0.
struct QnOrder {
  MonoidKind kind;
  int n = 0;
  std::vector<MunnIndex> labels;
  std::string order_version;

  int index_of(const MunnIndex& m) const;  // -1 if absent
};

inline constexpr const char* kOrderVersion = "qn-order-v1";

// All partitions of t, sorted by increasing largest part, then
// lexicographically as part sequences.
std::vector<Partition> enumerate_partitions(int t);

// Bipartitions of total size n. Grouped by underlying shape (shapes in
// enumerate_partitions order); within one shape the split into
// (positive, negative) runs an odometer over the distinct part sizes,
// the counter of the largest size varying fastest, all-positive first.
std::vector<BiPartition> enumerate_bipartitions(int n);

QnOrder enumerate_qn(MonoidKind kind, int n);

// binom(lambda, mu) = prod_i C(lambda_(i), mu_(i)).
Int multiplicity_binomial(const Partition& lam, const Partition& mu);

// mu <= lambda componentwise and lambda/mu has at most one cell per column.
bool is_horizontal_strip(const Partition& lam, const Partition& mu);

// Littlewood-Richardson coefficient c_{lam,mu}^{nu} by direct enumeration of
// lattice-word skew tableaux of shape nu/lam and content mu.
Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// 1 iff lam <= nu, |nu|-|lam| = l and nu/lam is a horizontal strip.
int pieri_coefficient(const Partition& lam, int l, const Partition& nu);

Int factorial(int n);
Int binomial(int n, int k);
// Centralizer order of the class of cycle type lam in S_{|lam|}.
Int symmetric_centralizer(const Partition& lam);

}  // namespace renner

#endif
