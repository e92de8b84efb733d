#ifndef RENNER_CHAR_TABLE_HPP
#define RENNER_CHAR_TABLE_HPP

#include <map>

#include "renner/labeled_matrix.hpp"
#include "renner/monoid.hpp"

namespace renner {

// chi_lam evaluated at the class of cycle type mu in S_t, |lam| = |mu| = t,
// by the Murnaghan-Nakayama border-strip recursion (memoized).
Int symmetric_character(const Partition& lam, const Partition& mu);

// Rows = classes (cycle types), columns = irreducible characters, both in
// the fixed partition order. t = 0 and t = 1 give the 1x1 table [1].
LabeledMatrix symmetric_group_table(int t);

// Irreducible character chi_{(lam,mu)} of the signed-permutation group W_n,
// evaluated at the unit w: induced from W_k x W_l (k = |lam| acting on
// {1..k} and bars, l = |mu| on the middle block) of the character
// (chi_lam of the underlying permutation) x (chi_mu of the underlying
// permutation times sign on the number of negative cycles).
Int hyperoctahedral_character(const BiPartition& chi, const PartialPerm& w,
                              const MonoidContext& ctx);

// Rows = conjugacy classes (gamma, delta) at the standard block
// representatives, columns = characters; trivial character is ((n),0).
LabeledMatrix hyperoctahedral_table(int n);

// Block diagonal matrix of unit-group character tables in Q_n order:
// the W_n table (symplectic only), then S_t tables for t = n..0.
LabeledMatrix assemble_Y(MonoidKind kind, int n);

// z_alpha: centralizer order of the class representative inside its
// unit group W_e (S_t for partition labels, W_n for bipartition labels).
using CentralizerTable = std::map<MunnIndex, Int>;
CentralizerTable centralizer_orders(MonoidKind kind, int n);

// Signed cycle type of w restricted to a bar-closed block of points.
BiPartition signed_type_on_block(const PartialPerm& w, const std::vector<int>& block);

// gamma and delta merged into one partition (the underlying cycle type).
Partition merge_bipartition(const BiPartition& b);

}  // namespace renner

#endif
