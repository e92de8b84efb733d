#ifndef RENNER_DECOMPOSITION_HPP
#define RENNER_DECOMPOSITION_HPP

#include "renner/char_table.hpp"
#include "renner/labeled_matrix.hpp"
#include "renner/monoid.hpp"

namespace renner {

struct SolomonDecomposition {
  LabeledMatrix M;
  LabeledMatrix A;
  LabeledMatrix B;
  LabeledMatrix Y;
};

// Block upper triangular with identity diagonal blocks. Bipartition row
// (gamma, delta), partition column mu: 2^{#parts(mu)} * binom(gamma, mu);
// partition row alpha, partition column mu: binom(alpha, mu).
LabeledMatrix a_matrix(MonoidKind kind, int n);

// Bipartition row (gamma, delta), partition column mu of rank t:
// sum over lam with gamma/lam a horizontal strip of size n-t of the
// Littlewood-Richardson coefficient c_{lam, delta}^{mu}; partition row nu,
// partition column mu: 1 iff nu/mu is a horizontal strip.
LabeledMatrix b_matrix(MonoidKind kind, int n);

// M = A*Y, cross-checked against Y*B (throws DecompositionMismatch on any
// disagreement).
SolomonDecomposition monoid_table(MonoidKind kind, int n);

// Direct evaluation of the monoid character chi_lam at sigma: for partition
// labels, the sum over fixed admissible point sets K of symmetric-group
// character values at restricted cycle types; for bipartition labels, the
// W_n character at units and 0 elsewhere.
Int llc_character_oracle(const MunnIndex& lam, const PartialPerm& sigma,
                         const MonoidContext& ctx);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// B = Y^T * diag(z_alpha)^{-1} * A * Y, entrywise over exact rationals.
CheckResult verify_group_identity(MonoidKind kind, int n);

// Y * Y^T = diag(z_alpha): column orthogonality of every block.
CheckResult verify_orthogonality(MonoidKind kind, int n);

// Restriction of monoid characters to the unit group: for every partition
// label lam of rank t and every unit w, the oracle value equals the
// explicit induction sum from S_t x W_{n-t} of (chi_lam x trivial).
CheckResult verify_unit_restriction(int n);

// B entries as restriction multiplicities: B_{nu,mu} = <Res chi_mu, chi_nu>
// over the subgroup attached to nu (S_s embedded by rank-s partial
// permutations for partition labels, W_n for bipartition labels).
CheckResult verify_restriction_multiplicities(MonoidKind kind, int n);

}  // namespace renner

#endif
