#ifndef RENNER_MONOID_HPP
#define RENNER_MONOID_HPP

#include <map>
#include <string>
#include <vector>

#include "renner/partial_perm.hpp"
#include "renner/partition.hpp"

namespace renner {

// Unique factorization r = w1 * e * w2 (left factor applied first) with
// w1 minimal in its coset w1·W_*(e) and w2 minimal in W(e)·w2.
struct NormalForm {
  PartialPerm w1;
  PartialPerm w2;
  int e_rank = 0;  // rank of e: 0..n, or the full degree for the identity
  int length = 0;  // l(w1) + l(w2)
};

// The rook monoid R_n (all injective partial transformations of {1..n}) or
// the symplectic Renner monoid RSp_2n, together with its unit group W,
// generators, idempotent cross-section and length/normal-form machinery.
class MonoidContext {
 public:
  MonoidContext(MonoidKind kind, int n);
  MonoidContext(const MonoidContext&) = delete;
  MonoidContext& operator=(const MonoidContext&) = delete;

  // Shared immutable contexts, built on first use.
  static const MonoidContext& get(MonoidKind kind, int n);

  MonoidKind kind() const { return kind_; }
  int n() const { return n_; }
  int degree() const { return m_; }

  // Symplectic: [t_0, s_1..s_{n-1}]; rook: [s_1..s_{n-1}].
  const std::vector<PartialPerm>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }

  PartialPerm one() const { return PartialPerm::identity(m_); }
  PartialPerm idempotent(int t) const;  // e_t: identity on {1..t}
  // Cross-section idempotents: e_0..e_n, plus the identity when distinct.
  std::vector<PartialPerm> cross_section() const;
  // Ranks of cross-section members paired with cross_section() order.
  std::vector<int> cross_section_ranks() const;

  bool contains(const PartialPerm& r) const;
  bool is_unit_element(const PartialPerm& r) const;

  const std::vector<PartialPerm>& units() const { return units_; }
  // The whole monoid, enumerated directly from admissible domain/range data
  // (built lazily; guarded by size).
  const std::vector<PartialPerm>& elements() const;

  // Coxeter length and one reduced word (generator indices) for a unit.
  int length(const PartialPerm& w) const;
  std::vector<int> reduced_word(const PartialPerm& w) const;
  int max_length() const { return max_length_; }

  QnOrder qn_order() const { return enumerate_qn(kind_, n_); }
  // Standard representative of the class labeled by idx: block units for
  // bipartition labels, e_t-truncated contiguous cycles for partition labels.
  PartialPerm class_representative(const MunnIndex& idx) const;
  // Conjugacy class label of a unit: signed cycle type (symplectic) or
  // plain cycle type (rook).
  MunnIndex unit_class(const PartialPerm& w) const;

  // Centralizer subgroups of e in W: W(e) = {w : we = ew} and
  // W_*(e) = {w : we = ew = e}, keyed by rank of e.
  const std::vector<PartialPerm>& w_commuting(int e_rank) const;
  const std::vector<PartialPerm>& w_star(int e_rank) const;

  // Unique normal form (memoized; exhaustive search over unit pairs).
  const NormalForm& normal_form(const PartialPerm& r) const;
  int monoid_length(const PartialPerm& r) const { return normal_form(r).length; }

  bool admissibility_needed() const { return kind_ == MonoidKind::Symplectic; }

 private:
  MonoidKind kind_;
  int n_;
  int m_;
  std::vector<PartialPerm> gens_;
  std::vector<std::string> gen_names_;
  std::vector<PartialPerm> units_;            // BFS order from the identity
  std::map<PartialPerm, int> length_;         // unit -> Coxeter length
  std::map<PartialPerm, std::pair<PartialPerm, int>> parent_;  // BFS tree
  int max_length_ = 0;

  mutable std::vector<PartialPerm> elements_;  // lazy
  mutable std::map<int, std::vector<PartialPerm>> w_commuting_;
  mutable std::map<int, std::vector<PartialPerm>> w_star_;
  mutable std::map<PartialPerm, NormalForm> nf_cache_;
};

}  // namespace renner

#endif
