#ifndef RENNER_HECKE_TABLE_HPP
#define RENNER_HECKE_TABLE_HPP

#include <map>
#include <string>

#include "renner/labeled_matrix.hpp"
#include "renner/partition.hpp"
#include "renner/qpoly.hpp"

namespace renner {

// A character table of a generic Hecke algebra together with the route that
// produced it: "seminormal" (traces of explicit matrix representations),
// "starkey" (class-sum coefficients, symmetric type only), or "product"
// (assembled from other tables).
struct HeckeTable {
  LabeledMatrix table;
  std::string provenance;
};

// Character table of H(S_t): rows indexed by classes mu, columns by
// characters lam (both in partition order), entry chi_lam(T_{w_mu}).
HeckeTable hecke_symmetric_table(int t);

// Same table computed from Starkey's class-sum formula instead of matrix
// traces; used to cross-check hecke_symmetric_table.
HeckeTable starkey_symmetric_table(int t);

// Character table of H(W_n): rows indexed by classes (gamma, delta), columns
// by characters (lam, mu), entry chi(T_{w_alpha}).
HeckeTable hecke_hyperoctahedral_table(int n);

// Block-diagonal table with the H(W_n) table (symplectic only) followed by
// the H(S_t) tables, t = n..0, matching the standard row/column order.
HeckeTable assemble_Yq(MonoidKind kind, int n);

// Character table M_q = Y_q . B of the generic monoid Hecke algebra. Entries
// are checked to be polynomial in q.
HeckeTable hecke_monoid_table(MonoidKind kind, int n);

// A_q = M_q . Y_q^{-1}, the q-analogue of the unipotent change of basis.
HeckeTable hecke_a_matrix(MonoidKind kind, int n);

// chi_lam evaluated on the normalized class sum of mu in H(S_t) via
// Starkey's rule: sum over tuples (nu^{(1)}, ..., nu^{(k)}), nu^{(i)} a
// partition of mu_i, of chi_lam(join of the nu^{(i)}) times
// prod_i (1/z_{nu^{(i)}}) * prod_{p in nu^{(i)}} (q^p - 1) / (q - 1).
QRat starkey_value(const Partition& lam, const Partition& mu);

// Row-wise expansion of the Hecke table over the classical one:
// (M_q)_{mu,*} = sum_gamma p[mu][gamma] * M_{gamma,*}. Coefficients outside
// the block of mu (units stay units, rank-t classes stay rank t) must vanish;
// a nonzero stray entry raises SupportViolation.
struct TransitionCoefficients {
  std::map<MunnIndex, std::map<MunnIndex, QRat>> p;
};

TransitionCoefficients transition_coefficients(MonoidKind kind, int n);

}  // namespace renner

#endif
