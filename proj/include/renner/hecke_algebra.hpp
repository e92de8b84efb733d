#ifndef RENNER_HECKE_ALGEBRA_HPP
#define RENNER_HECKE_ALGEBRA_HPP

#include <map>

#include "renner/monoid.hpp"
#include "renner/partial_perm.hpp"
#include "renner/partition.hpp"
#include "renner/qpoly.hpp"

namespace renner {

// Element of the generic Hecke algebra H(R) in the T_r basis: a sparse
// rational-function combination of monoid elements.
class HeckeElement {
 public:
  explicit HeckeElement(const MonoidContext& ctx) : ctx_(&ctx) {}
  static HeckeElement basis(const MonoidContext& ctx, const PartialPerm& r);

  const MonoidContext& context() const { return *ctx_; }
  const std::map<PartialPerm, QRat>& terms() const { return terms_; }
  // Accumulates c onto the coefficient of T_r, pruning exact zeros.
  void add(const PartialPerm& r, const QRat& c);
  QRat coefficient(const PartialPerm& r) const;

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement scaled(const QRat& c) const;
  bool operator==(const HeckeElement& o) const;
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

 private:
  const MonoidContext* ctx_;
  std::map<PartialPerm, QRat> terms_;
};

// The defining relations, applied termwise. x must be a simple reflection or
// a cross-section idempotent of h's context:
//   x simple:      T_x T_r = T_{xr}                 if l(xr) = l(r)+1
//                          = q T_r                  if l(xr) = l(r)
//                          = (q-1) T_r + q T_{xr}   if l(xr) = l(r)-1
//   x idempotent:  T_x T_r = q^{l(r)-l(xr)} T_{xr}
HeckeElement left_mul_generator(const PartialPerm& x, const HeckeElement& h);

// Bilinear associative product. Each left factor T_r is expanded along the
// normal form r = w1 e w2 as T_{w1} T_e T_{w2} (lengths add, so the product
// of the factors is exactly T_r) and folded onto the right factor one
// left_mul_generator step at a time; only the defining relations are used.
HeckeElement multiply(const HeckeElement& h1, const HeckeElement& h2);

// Coefficients c_{r,lambda} with T_r = sum_lambda c_{r,lambda} T_{r_lambda}
// modulo the commutator subspace, where r_lambda runs over the standard
// elements (class representatives of the Munn classes). Deterministic.
using ReductionResult = std::map<MunnIndex, QRat>;
ReductionResult reduce_to_standard(const PartialPerm& r,
                                   const MonoidContext& ctx);

// chi*_lambda(T_r) = sum_mu c_{r,mu} (M_q)_{mu,lambda}.
QRat character_value_at(const PartialPerm& r, const MunnIndex& lambda,
                        const MonoidContext& ctx);

}  // namespace renner

#endif
