#ifndef RENNER_SEMINORMAL_HPP
#define RENNER_SEMINORMAL_HPP

#include <vector>

#include "renner/partition.hpp"
#include "renner/qpoly.hpp"

namespace renner {

// Irreducible matrix representation of the generic Hecke algebra of S_t
// (single shape) or of the signed-permutation group W_n (pair of shapes) in
// the seminormal basis of standard (bi)tableaux.
//
// Basis vectors are standard fillings; the generator T_i acts on the span of
// a filling S and its i,i+1-swap S' by
//   T_i v_S = a_S v_S + (1 + a_S) v_{S'}   (S' standard),
//   T_i v_S = a_S v_S                      (S' not standard),
// with a_S = (q-1)/(1 - res(i)/res(i+1)) and residues res = u_c q^{col-row},
// u_1 = q, u_2 = -1 (u = 1 in type A, where the scalar cancels). T_0 acts
// diagonally with eigenvalue q or -1 according to the component holding
// entry 1. The one-dimensional representation of the pair ((n), 0) sends
// every T_i to q (trivial) and ((0), (1^n))-type data produces the other
// sign patterns.
class SeminormalRep {
 public:
  // Representation of H(S_t) labeled by lam, |lam| = t >= 0. Generator
  // index i-1 corresponds to the transposition s_i.
  static SeminormalRep symmetric(const Partition& lam);
  // Representation of H(W_n) labeled by (positive, negative) shapes.
  // Generator index 0 is T_0, index i is s_i.
  static SeminormalRep hyperoctahedral(const BiPartition& chi);

  int dimension() const { return dim_; }
  int num_generators() const { return static_cast<int>(mats_.size()); }
  const std::vector<std::vector<QRat>>& matrix(int gen) const;

  // Trace of T_w, with w given as a word in generator indices (the matrices
  // multiply in word order; the empty word is the identity).
  QRat trace_of_word(const std::vector<int>& word) const;

 private:
  int dim_ = 0;
  std::vector<std::vector<std::vector<QRat>>> mats_;
};

}  // namespace renner

#endif
