#include "renner/monoid.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <set>

namespace renner {

namespace {

// All subsets of {1..m} of size t that are admissible (when required),
// as sorted vectors.
void admissible_subsets_rec(int m, int t, int start, bool admissible_needed,
                            std::vector<int>& acc,
                            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == t) {
    if (!admissible_needed || is_admissible(acc, m)) out.push_back(acc);
    return;
  }
  for (int i = start; i <= m; ++i) {
    acc.push_back(i);
    admissible_subsets_rec(m, t, i + 1, admissible_needed, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> admissible_subsets(int m, int t, bool admissible_needed) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  admissible_subsets_rec(m, t, 1, admissible_needed, acc, out);
  return out;
}

}  // namespace

MonoidContext::MonoidContext(MonoidKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw UnsupportedSize("rank must be at least 1");
  if (kind == MonoidKind::Rook && n > 7)
    throw UnsupportedSize("rook contexts supported for n <= 7");
  if (kind == MonoidKind::Symplectic && n > 4)
    throw UnsupportedSize("symplectic contexts supported for n <= 4");
  m_ = kind == MonoidKind::Rook ? n : 2 * n;

  if (kind == MonoidKind::Symplectic) {
    gens_.push_back(PartialPerm::from_cycles(m_, {{1, bar(1, m_)}}));
    gen_names_.push_back("t0");
  }
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<std::vector<int>> cycles;
    cycles.push_back({i, i + 1});
    if (kind == MonoidKind::Symplectic) cycles.push_back({bar(i, m_), bar(i + 1, m_)});
    gens_.push_back(PartialPerm::from_cycles(m_, cycles));
    gen_names_.push_back("s" + std::to_string(i));
  }

  // Breadth-first closure of the generators gives W with Coxeter lengths and
  // a reduced word per element (append the generator used to reach it).
  PartialPerm id = PartialPerm::identity(m_);
  length_[id] = 0;
  units_.push_back(id);
  std::deque<PartialPerm> queue{id};
  while (!queue.empty()) {
    PartialPerm w = queue.front();
    queue.pop_front();
    int lw = length_.at(w);
    for (size_t g = 0; g < gens_.size(); ++g) {
      PartialPerm next = w * gens_[g];
      if (length_.count(next)) continue;
      length_[next] = lw + 1;
      parent_[next] = {w, static_cast<int>(g)};
      max_length_ = std::max(max_length_, lw + 1);
      units_.push_back(next);
      queue.push_back(next);
    }
  }
}

const MonoidContext& MonoidContext::get(MonoidKind kind, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<MonoidContext>> cache;
  auto key = std::make_pair(static_cast<int>(kind), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<MonoidContext>(kind, n)).first;
  return *it->second;
}

PartialPerm MonoidContext::idempotent(int t) const {
  if (t < 0 || t > n_) throw UnsupportedSize("idempotent rank out of range");
  std::vector<int> img(m_, 0);
  for (int i = 1; i <= t; ++i) img[i - 1] = i;
  return PartialPerm(std::move(img));
}

std::vector<PartialPerm> MonoidContext::cross_section() const {
  std::vector<PartialPerm> lam;
  for (int t = 0; t <= n_; ++t) lam.push_back(idempotent(t));
  if (kind_ == MonoidKind::Symplectic) lam.push_back(one());
  return lam;
}

std::vector<int> MonoidContext::cross_section_ranks() const {
  std::vector<int> ranks;
  for (int t = 0; t <= n_; ++t) ranks.push_back(t);
  if (kind_ == MonoidKind::Symplectic) ranks.push_back(m_);
  return ranks;
}

bool MonoidContext::contains(const PartialPerm& r) const {
  if (r.degree() != m_) return false;
  if (kind_ == MonoidKind::Rook) return true;  // all injective partial maps
  return is_symplectic(r);
}

bool MonoidContext::is_unit_element(const PartialPerm& r) const {
  return r.degree() == m_ && r.is_total() && contains(r);
}

const std::vector<PartialPerm>& MonoidContext::elements() const {
  if (!elements_.empty()) return elements_;
  // Proper elements: bijections between admissible (or arbitrary, for rook)
  // t-subsets with t <= n; full-rank elements: the units.
  std::set<PartialPerm> all(units_.begin(), units_.end());
  for (int t = 0; t <= n_; ++t) {
    auto doms = admissible_subsets(m_, t, admissibility_needed());
    auto rans = doms;
    for (const auto& dom : doms) {
      for (const auto& ran : rans) {
        std::vector<int> perm(ran);
        std::sort(perm.begin(), perm.end());
        do {
          std::vector<int> img(m_, 0);
          for (int i = 0; i < t; ++i) img[dom[i] - 1] = perm[i];
          all.insert(PartialPerm(std::move(img)));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  elements_.assign(all.begin(), all.end());
  for (const auto& r : elements_)
    if (!contains(r)) throw DefinitionMismatch("enumerated element fails membership");
  return elements_;
}

int MonoidContext::length(const PartialPerm& w) const {
  auto it = length_.find(w);
  if (it == length_.end()) throw NotInMonoid("length of a non-unit requested");
  return it->second;
}

std::vector<int> MonoidContext::reduced_word(const PartialPerm& w) const {
  if (!length_.count(w)) throw NotInMonoid("reduced word of a non-unit requested");
  std::vector<int> word;
  PartialPerm cur = w;
  while (true) {
    auto it = parent_.find(cur);
    if (it == parent_.end()) break;  // reached the identity
    word.push_back(it->second.second);
    cur = it->second.first;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

PartialPerm MonoidContext::class_representative(const MunnIndex& idx) const {
  if (idx.is_bip()) {
    if (kind_ != MonoidKind::Symplectic)
      throw ParseError("bipartition classes only exist in symplectic contexts");
    if (idx.bip.total_size() != n_) throw ParseError("bipartition size mismatch");
    std::vector<std::vector<int>> cycles;
    int offset = 0;
    // Negative blocks first, sizes ascending: one 2a-cycle through the
    // block and its bar image.
    std::vector<int> neg(idx.bip.negative.parts);
    std::sort(neg.begin(), neg.end());
    for (int a : neg) {
      std::vector<int> cyc;
      for (int i = 1; i <= a; ++i) cyc.push_back(offset + i);
      for (int i = 1; i <= a; ++i) cyc.push_back(bar(offset + i, m_));
      cycles.push_back(std::move(cyc));
      offset += a;
    }
    // Positive blocks, sizes descending: an a-cycle and its mirror.
    for (int a : idx.bip.positive.parts) {
      std::vector<int> cyc, mirror;
      for (int i = 1; i <= a; ++i) cyc.push_back(offset + i);
      for (int i = 1; i <= a; ++i) mirror.push_back(bar(offset + i, m_));
      cycles.push_back(std::move(cyc));
      cycles.push_back(std::move(mirror));
      offset += a;
    }
    return PartialPerm::from_cycles(m_, cycles);
  }
  if (idx.t > n_) throw ParseError("partition class rank exceeds n");
  // Contiguous increasing cycles on {1..t}, truncated by e_t on both sides.
  std::vector<std::vector<int>> cycles;
  int offset = 0;
  for (int a : idx.lam.parts) {
    std::vector<int> cyc;
    for (int i = 1; i <= a; ++i) cyc.push_back(offset + i);
    cycles.push_back(std::move(cyc));
    offset += a;
  }
  PartialPerm w = PartialPerm::from_cycles(m_, cycles);
  std::vector<int> K;
  for (int i = 1; i <= idx.t; ++i) K.push_back(i);
  return w.restrict(K);
}

MunnIndex MonoidContext::unit_class(const PartialPerm& w) const {
  if (!is_unit_element(w)) throw NotInMonoid("unit_class requires a unit");
  if (kind_ == MonoidKind::Symplectic) return MunnIndex::Bip(signed_cycle_type(w));
  return MunnIndex::Part(cycle_type(w));
}

const std::vector<PartialPerm>& MonoidContext::w_commuting(int e_rank) const {
  auto it = w_commuting_.find(e_rank);
  if (it != w_commuting_.end()) return it->second;
  PartialPerm e = e_rank == m_ ? one() : idempotent(e_rank);
  std::vector<PartialPerm> comm, star;
  for (const PartialPerm& w : units_) {
    PartialPerm we = w * e, ew = e * w;
    if (we == ew) {
      comm.push_back(w);
      if (we == e) star.push_back(w);
    }
  }
  w_star_[e_rank] = std::move(star);
  return w_commuting_.emplace(e_rank, std::move(comm)).first->second;
}

const std::vector<PartialPerm>& MonoidContext::w_star(int e_rank) const {
  if (!w_star_.count(e_rank)) w_commuting(e_rank);
  return w_star_.at(e_rank);
}

const NormalForm& MonoidContext::normal_form(const PartialPerm& r) const {
  auto cached = nf_cache_.find(r);
  if (cached != nf_cache_.end()) return cached->second;
  if (!contains(r)) throw NotInMonoid("normal form of " + r.to_string());

  int t = r.rank();
  int e_rank = t == m_ ? m_ : t;
  PartialPerm e = e_rank == m_ ? one() : idempotent(e_rank);
  const auto& commuting = w_commuting(e_rank);
  const auto& star = w_star(e_rank);

  std::vector<int> dom = r.domain();
  std::vector<std::pair<PartialPerm, PartialPerm>> valid;  // all (w1, w2)
  for (const PartialPerm& w1 : units_) {
    // r = w1*e*w2 forces w1(dom(r)) = {1..t} and w2 on {1..t}.
    bool ok = true;
    for (int x : dom)
      if (w1.apply(x) > t || w1.apply(x) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    PartialPerm w1inv = w1.inverse();
    for (const PartialPerm& w2 : units_) {
      bool match = true;
      for (int y = 1; y <= t && match; ++y)
        if (w2.apply(y) != r.apply(w1inv.apply(y))) match = false;
      if (match && w1 * e * w2 == r) valid.emplace_back(w1, w2);
    }
  }
  if (valid.empty()) throw DecompositionMismatch("no unit pair factors " + r.to_string());

  // Keep the pairs meeting both reducedness conditions; there must be
  // exactly one, and it must attain the minimal total length.
  int min_total = -1;
  for (const auto& [w1, w2] : valid) {
    int tot = length(w1) + length(w2);
    if (min_total < 0 || tot < min_total) min_total = tot;
  }
  std::vector<std::pair<PartialPerm, PartialPerm>> reduced;
  for (const auto& [w1, w2] : valid) {
    bool w1_min = true;
    for (const PartialPerm& u : star)
      if (length(w1 * u) < length(w1)) w1_min = false;
    bool w2_min = true;
    for (const PartialPerm& u : commuting)
      if (length(u * w2) < length(w2)) w2_min = false;
    if (w1_min && w2_min) reduced.emplace_back(w1, w2);
  }
  if (reduced.size() != 1)
    throw DecompositionMismatch("normal form of " + r.to_string() + " is not unique: " +
                                std::to_string(reduced.size()) + " candidates");
  NormalForm nf;
  nf.w1 = reduced.front().first;
  nf.w2 = reduced.front().second;
  nf.e_rank = e_rank;
  nf.length = length(nf.w1) + length(nf.w2);
  if (nf.length != min_total)
    throw DecompositionMismatch("reduced pair misses minimal total length");
  return nf_cache_.emplace(r, std::move(nf)).first->second;
}

}  // namespace renner
