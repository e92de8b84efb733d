#ifndef RENNER_PARTIAL_PERM_HPP
#define RENNER_PARTIAL_PERM_HPP

#include <string>
#include <vector>

#include "renner/errors.hpp"
#include "renner/partition.hpp"

namespace renner {

// Injective partial transformation of {1..m}. image[i-1] = sigma(i), with 0
// meaning undefined. Composition acts on the right: (a*b)(x) = b(a(x)).
class PartialPerm {
 public:
  PartialPerm() = default;
  explicit PartialPerm(std::vector<int> image);
  static PartialPerm identity(int m);
  static PartialPerm zero(int m);
  // Cycle (x1 x2 ... xk): x1->x2->...->xk->x1, all other points fixed.
  static PartialPerm from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(image_.size()); }
  int apply(int i) const;  // 0 if undefined
  int rank() const;
  bool is_total() const { return rank() == degree(); }
  bool is_zero() const { return rank() == 0; }
  std::vector<int> domain() const;
  std::vector<int> range() const;
  const std::vector<int>& image() const { return image_; }

  PartialPerm operator*(const PartialPerm& o) const;  // apply *this first
  PartialPerm inverse() const;
  // Restriction to the points of K (domain side).
  PartialPerm restrict(const std::vector<int>& K) const;

  bool operator==(const PartialPerm& o) const { return image_ == o.image_; }
  bool operator!=(const PartialPerm& o) const { return !(*this == o); }
  bool operator<(const PartialPerm& o) const { return image_ < o.image_; }

  std::string to_string() const;                    // "[0,0,2,0]"
  static PartialPerm parse(const std::string& s, int expected_degree = -1);

 private:
  std::vector<int> image_;
};

int bar(int i, int m);
bool is_admissible(const std::vector<int>& K, int m);

// Domain-and-range admissibility test for degree-2n partial permutations,
// cross-checked against the matrix-product criterion
// (A^t J A and A J A^t both 0 or J, where J is the antidiagonal symplectic
// form matrix). Throws DefinitionMismatch if the two tests disagree.
bool is_symplectic(const PartialPerm& sigma);

struct OmegaDecomposition {
  PartialPerm circ;        // restriction to the recurrent points
  PartialPerm nilpotent;   // the rest of sigma
  std::vector<int> recurrent;  // I°: points never mapped to 0 under iteration
};
OmegaDecomposition omega_circle(const PartialPerm& sigma);

// All admissible K ⊆ I°(sigma) with |K| = t and sigma(K) = K, sorted.
// Rook contexts pass admissible_needed = false (every subset qualifies).
std::vector<std::vector<int>> cycle_sets(const PartialPerm& sigma, int t,
                                         bool admissible_needed);

// Cycle type of sigma conjugated onto {1..|K|} by the order-preserving
// bijection {1..|K|} -> K. Requires sigma(K) = K.
Partition restricted_cycle_type(const PartialPerm& sigma, const std::vector<int>& K);

// Cycle type of a total permutation (degree m, all points).
Partition cycle_type(const PartialPerm& w);

// Signed cycle type (gamma, delta) of a bar-equivariant permutation of
// {1..2n}: orbit pairs {O, bar(O)} contribute |O| to gamma, bar-closed
// orbits contribute |O|/2 to delta.
BiPartition signed_cycle_type(const PartialPerm& w);

}  // namespace renner

#endif
