#include "renner/hecke_algebra.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "renner/errors.hpp"
#include "renner/hecke_table.hpp"

namespace renner {

namespace {

QRat q_power_rat(int k) {
  if (k >= 0) return QRat(QPoly::q_power(k));
  return QRat(QPoly(1), QPoly::q_power(-k));
}

std::mutex& engine_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

HeckeElement HeckeElement::basis(const MonoidContext& ctx,
                                 const PartialPerm& r) {
  if (!ctx.contains(r))
    throw NotInMonoid("basis element " + r.to_string() +
                      " is not in the monoid");
  HeckeElement h(ctx);
  h.add(r, QRat(1));
  return h;
}

void HeckeElement::add(const PartialPerm& r, const QRat& c) {
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    if (c != QRat(0)) terms_.emplace(r, c);
    return;
  }
  it->second = it->second + c;
  if (it->second == QRat(0)) terms_.erase(it);
}

QRat HeckeElement::coefficient(const PartialPerm& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? QRat(0) : it->second;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  if (ctx_ != o.ctx_)
    throw DefinitionMismatch("Hecke elements from different contexts");
  HeckeElement out = *this;
  for (const auto& [r, c] : o.terms_) out.add(r, c);
  return out;
}

HeckeElement HeckeElement::scaled(const QRat& c) const {
  HeckeElement out(*ctx_);
  if (c == QRat(0)) return out;
  for (const auto& [r, coeff] : terms_) out.add(r, coeff * c);
  return out;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  return ctx_ == o.ctx_ && terms_ == o.terms_;
}

HeckeElement left_mul_generator(const PartialPerm& x, const HeckeElement& h) {
  const MonoidContext& ctx = h.context();
  const auto& gens = ctx.generators();
  bool simple = std::find(gens.begin(), gens.end(), x) != gens.end();
  bool idem = false;
  if (!simple) {
    auto cross = ctx.cross_section();
    idem = std::find(cross.begin(), cross.end(), x) != cross.end();
  }
  if (!simple && !idem)
    throw DefinitionMismatch(
        "left_mul_generator needs a simple reflection or a cross-section "
        "idempotent");

  const QRat q{QPoly::q()};
  const QRat q_minus_one{QPoly::q() - QPoly(1)};
  HeckeElement out(ctx);
  for (const auto& [r, c] : h.terms()) {
    PartialPerm xr = x * r;
    int lr = ctx.monoid_length(r);
    int lxr = ctx.monoid_length(xr);
    if (idem) {
      out.add(xr, c * q_power_rat(lr - lxr));
      continue;
    }
    if (lxr == lr + 1) {
      out.add(xr, c);
    } else if (lxr == lr) {
      out.add(r, c * q);
    } else if (lxr == lr - 1) {
      out.add(r, c * q_minus_one);
      out.add(xr, c * q);
    } else {
      throw DefinitionMismatch("generator changed the length by " +
                               std::to_string(lxr - lr));
    }
  }
  return out;
}

namespace {

// T_{w1} T_e T_{w2} (e skipped for units) as the factor sequence of T_r;
// folding the sequence right-to-left onto an element computes T_r * h using
// left multiplications only.
std::vector<PartialPerm> factor_sequence(const PartialPerm& r,
                                         const MonoidContext& ctx) {
  std::vector<PartialPerm> seq;
  const auto& gens = ctx.generators();
  if (ctx.is_unit_element(r)) {
    for (int g : ctx.reduced_word(r)) seq.push_back(gens[g]);
    return seq;
  }
  const NormalForm& nf = ctx.normal_form(r);
  for (int g : ctx.reduced_word(nf.w1)) seq.push_back(gens[g]);
  seq.push_back(ctx.idempotent(nf.e_rank));
  for (int g : ctx.reduced_word(nf.w2)) seq.push_back(gens[g]);
  return seq;
}

HeckeElement fold_left(const std::vector<PartialPerm>& seq,
                       const HeckeElement& h) {
  HeckeElement out = h;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    out = left_mul_generator(*it, out);
  return out;
}

}  // namespace

HeckeElement multiply(const HeckeElement& h1, const HeckeElement& h2) {
  if (&h1.context() != &h2.context())
    throw DefinitionMismatch("Hecke elements from different contexts");
  HeckeElement out(h1.context());
  for (const auto& [r, c] : h1.terms()) {
    HeckeElement part = fold_left(factor_sequence(r, h1.context()), h2);
    out = out + part.scaled(c);
  }
  return out;
}

namespace {

using GroupReduction = std::map<MunnIndex, QRat>;

// Geck-Pfeiffer style rewriting in the group Hecke algebra H(W): breadth
// first over length-preserving conjugations v -> s v s until either a
// length-decreasing conjugation is found (then T_v = (q-1) T_{sv} + q T_{svs}
// modulo commutators, both strictly shorter) or v is of minimal length in
// its class (then T_v is equivalent to the standard element of the class).
GroupReduction group_reduce(const PartialPerm& u, const MonoidContext& gctx) {
  using Key = std::pair<const MonoidContext*, PartialPerm>;
  static std::map<Key, GroupReduction> memo;
  {
    std::lock_guard<std::mutex> lock(engine_mutex());
    auto it = memo.find({&gctx, u});
    if (it != memo.end()) return it->second;
  }

  GroupReduction result;
  int lu = gctx.length(u);
  std::set<PartialPerm> seen = {u};
  std::deque<PartialPerm> queue = {u};
  bool reduced = false;
  while (!queue.empty() && !reduced) {
    PartialPerm v = queue.front();
    queue.pop_front();
    for (const PartialPerm& s : gctx.generators()) {
      PartialPerm svs = s * v * s;
      int l = gctx.length(svs);
      if (l == lu) {
        if (seen.insert(svs).second) queue.push_back(svs);
      } else if (l == lu - 2) {
        PartialPerm sv = s * v;
        const QRat q{QPoly::q()};
        const QRat q_minus_one{QPoly::q() - QPoly(1)};
        for (const auto& [idx, c] : group_reduce(sv, gctx))
          result[idx] = result[idx] + c * q_minus_one;
        for (const auto& [idx, c] : group_reduce(svs, gctx))
          result[idx] = result[idx] + c * q;
        reduced = true;
        break;
      }
    }
  }
  if (!reduced) result[gctx.unit_class(u)] = QRat(1);
  for (auto it = result.begin(); it != result.end();)
    it = it->second == QRat(0) ? result.erase(it) : std::next(it);

  std::lock_guard<std::mutex> lock(engine_mutex());
  return memo.emplace(Key{&gctx, u}, std::move(result)).first->second;
}

void accumulate(ReductionResult& into, const ReductionResult& from,
                const QRat& scale) {
  for (const auto& [idx, c] : from) {
    auto it = into.find(idx);
    if (it == into.end())
      into.emplace(idx, c * scale);
    else
      it->second = it->second + c * scale;
  }
}

}  // namespace

ReductionResult reduce_to_standard(const PartialPerm& r,
                                   const MonoidContext& ctx) {
  if (!ctx.contains(r))
    throw NotInMonoid("reduce_to_standard: " + r.to_string() +
                      " is not in the monoid");
  using Key = std::pair<const MonoidContext*, PartialPerm>;
  static std::map<Key, ReductionResult> memo;
  {
    std::lock_guard<std::mutex> lock(engine_mutex());
    auto it = memo.find({&ctx, r});
    if (it != memo.end()) return it->second;
  }

  ReductionResult result;
  if (ctx.is_unit_element(r)) {
    result = group_reduce(r, ctx);
  } else {
    const NormalForm& nf = ctx.normal_form(r);
    int t = nf.e_rank;
    PartialPerm e = ctx.idempotent(t);
    // T_r = T_{w1} (T_e T_{w2}) is equivalent to T_e T_{w2} T_{w1}; the
    // group product T_{w2} T_{w1} expands over units, and each T_{e u} is
    // equivalent to q^{l(eu)-l(eue)} T_{eue}.
    HeckeElement group_part =
        multiply(HeckeElement::basis(ctx, nf.w2), HeckeElement::basis(ctx, nf.w1));
    for (const auto& [u, a] : group_part.terms()) {
      PartialPerm eu = e * u;
      PartialPerm eue = eu * e;
      QRat coeff = a * q_power_rat(ctx.length(u) - ctx.monoid_length(eue));
      if (eue.rank() == t) {
        if (t == 0) {
          MunnIndex zero = MunnIndex::Part(Partition());
          result[zero] = result[zero] + coeff;
        } else {
          std::vector<int> image(t);
          for (int i = 1; i <= t; ++i) image[i - 1] = eue.apply(i);
          PartialPerm local{image};
          GroupReduction sub =
              group_reduce(local, MonoidContext::get(MonoidKind::Rook, t));
          accumulate(result, sub, coeff);
        }
      } else {
        accumulate(result, reduce_to_standard(eue, ctx), coeff);
      }
    }
    for (auto it = result.begin(); it != result.end();)
      it = it->second == QRat(0) ? result.erase(it) : std::next(it);
  }

  std::lock_guard<std::mutex> lock(engine_mutex());
  return memo.emplace(Key{&ctx, r}, std::move(result)).first->second;
}

QRat character_value_at(const PartialPerm& r, const MunnIndex& lambda,
                        const MonoidContext& ctx) {
  static std::map<const MonoidContext*, LabeledMatrix> mq_memo;
  const LabeledMatrix* mq = nullptr;
  {
    std::lock_guard<std::mutex> lock(engine_mutex());
    auto it = mq_memo.find(&ctx);
    if (it != mq_memo.end()) mq = &it->second;
  }
  if (mq == nullptr) {
    LabeledMatrix table = hecke_monoid_table(ctx.kind(), ctx.n()).table;
    std::lock_guard<std::mutex> lock(engine_mutex());
    mq = &mq_memo.emplace(&ctx, std::move(table)).first->second;
  }
  int col = mq->col_index(lambda);
  QRat total(0);
  for (const auto& [mu, c] : reduce_to_standard(r, ctx))
    total = total + c * mq->at(mq->row_index(mu), col);
  return total;
}

}  // namespace renner
