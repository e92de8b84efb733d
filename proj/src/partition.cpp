#include "renner/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace renner {

std::string kind_to_string(MonoidKind k) {
  return k == MonoidKind::Rook ? "rook" : "symplectic";
}

MonoidKind kind_from_string(const std::string& s) {
  if (s == "rook") return MonoidKind::Rook;
  if (s == "symplectic") return MonoidKind::Symplectic;
  throw ParseError("unknown monoid kind '" + s + "'");
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw ParseError("partition parts must be positive");
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw ParseError("partition parts must be weakly decreasing");
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), i));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.parts.size() > parts.size()) return false;
  for (size_t i = 0; i < mu.parts.size(); ++i)
    if (mu.parts[i] > parts[i]) return false;
  return true;
}

std::string Partition::inner_string() const {
  if (parts.empty()) return "0";
  std::ostringstream os;
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    size_t run = j - i;
    if (parts[i] > 9 || run > 9)
      throw UnsupportedSize("partition label notation requires parts and multiplicities <= 9");
    os << parts[i];
    if (run > 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

Partition Partition::parse_inner(const std::string& s) {
  if (s == "0" || s.empty()) return Partition();
  std::vector<int> parts;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c < '1' || c > '9') throw ParseError("bad partition label '" + s + "'");
    int part = c - '0';
    ++i;
    int run = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      if (i >= s.size() || s[i] < '1' || s[i] > '9')
        throw ParseError("bad exponent in partition label '" + s + "'");
      run = s[i] - '0';
      ++i;
    }
    for (int k = 0; k < run; ++k) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

MunnIndex MunnIndex::Bip(BiPartition b) {
  MunnIndex m;
  m.tag = Tag::Bip;
  m.bip = std::move(b);
  return m;
}

MunnIndex MunnIndex::Part(const Partition& lam) {
  MunnIndex m;
  m.tag = Tag::Part;
  m.t = lam.size();
  m.lam = lam;
  return m;
}

std::string MunnIndex::to_string() const {
  if (tag == Tag::Bip)
    return "(" + bip.positive.inner_string() + "," + bip.negative.inner_string() + ")";
  return "(" + lam.inner_string() + ")";
}

MunnIndex MunnIndex::parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("bad label '" + s + "'");
  std::string inner = s.substr(1, s.size() - 2);
  auto comma = inner.find(',');
  if (comma == std::string::npos) return Part(Partition::parse_inner(inner));
  BiPartition b;
  b.positive = Partition::parse_inner(inner.substr(0, comma));
  b.negative = Partition::parse_inner(inner.substr(comma + 1));
  return Bip(b);
}

bool MunnIndex::operator==(const MunnIndex& o) const {
  if (tag != o.tag) return false;
  if (tag == Tag::Bip) return bip == o.bip;
  return t == o.t && lam == o.lam;
}

bool MunnIndex::operator<(const MunnIndex& o) const {
  if (tag != o.tag) return tag == Tag::Bip;  // Bip block first
  if (tag == Tag::Bip) return bip < o.bip;
  if (t != o.t) return t > o.t;  // higher rank first
  return lam < o.lam;
}

int QnOrder::index_of(const MunnIndex& m) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == m) return static_cast<int>(i);
  return -1;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int t) {
  if (t < 0) throw UnsupportedSize("negative partition size");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(t, std::max(t, 1), acc, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.largest() != b.largest()) return a.largest() < b.largest();
    return a.parts < b.parts;
  });
  if (t == 0) return {Partition()};
  return out;
}

std::vector<BiPartition> enumerate_bipartitions(int n) {
  std::vector<BiPartition> out;
  for (const Partition& shape : enumerate_partitions(n)) {
    // Distinct part sizes, largest first, with multiplicities.
    std::vector<std::pair<int, int>> sizes;  // (part, multiplicity)
    for (int p : shape.parts) {
      if (!sizes.empty() && sizes.back().first == p)
        ++sizes.back().second;
      else
        sizes.emplace_back(p, 1);
    }
    // Odometer over how many parts of each size go negative; the counter
    // for the largest size varies fastest, all-positive first.
    std::vector<int> neg(sizes.size(), 0);
    while (true) {
      std::vector<int> pos_parts, neg_parts;
      for (size_t i = 0; i < sizes.size(); ++i) {
        for (int k = 0; k < sizes[i].second - neg[i]; ++k) pos_parts.push_back(sizes[i].first);
        for (int k = 0; k < neg[i]; ++k) neg_parts.push_back(sizes[i].first);
      }
      BiPartition b;
      b.positive = Partition(pos_parts);
      b.negative = Partition(neg_parts);
      out.push_back(std::move(b));
      size_t i = 0;
      while (i < sizes.size() && neg[i] == sizes[i].second) {
        neg[i] = 0;
        ++i;
      }
      if (i == sizes.size()) break;
      ++neg[i];
    }
  }
  return out;
}

QnOrder enumerate_qn(MonoidKind kind, int n) {
  if (n < 0) throw UnsupportedSize("rank must be nonnegative");
  QnOrder order;
  order.kind = kind;
  order.n = n;
  order.order_version = kOrderVersion;
  if (kind == MonoidKind::Symplectic)
    for (const BiPartition& b : enumerate_bipartitions(n))
      order.labels.push_back(MunnIndex::Bip(b));
  for (int t = n; t >= 0; --t)
    for (const Partition& lam : enumerate_partitions(t))
      order.labels.push_back(MunnIndex::Part(lam));
  return order;
}

Int multiplicity_binomial(const Partition& lam, const Partition& mu) {
  int top = std::max(lam.largest(), mu.largest());
  Int result = 1;
  for (int i = 1; i <= top; ++i)
    result *= binomial(lam.multiplicity(i), mu.multiplicity(i));
  return result;
}

bool is_horizontal_strip(const Partition& lam, const Partition& mu) {
  // lam/mu is a horizontal strip: mu interleaves lam.
  if (!lam.contains(mu)) return false;
  for (size_t i = 0; i + 1 < lam.parts.size(); ++i) {
    int mu_i = i < mu.parts.size() ? mu.parts[i] : 0;
    if (mu_i < lam.parts[i + 1]) return false;
  }
  return true;
}

namespace {

// Fill the skew shape nu/lam in reverse reading order (each row right to
// left, rows top to bottom) with entries 1..len(mu): weakly increasing along
// rows, strictly increasing down columns, and at every point of the filling
// order the multiset placed so far is a lattice word. Completed fillings are
// exactly the Littlewood-Richardson tableaux, so count = c_{lam,mu}^{nu}.
struct LrCounter {
  const Partition& lam;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> grid;  // grid[r][c], 0 = not yet filled
  std::vector<int> used;               // how many of each value placed
  Int count = 0;

  LrCounter(const Partition& l, const Partition& m, const Partition& nn)
      : lam(l), mu(m), nu(nn), used(m.parts.size() + 1, 0) {}

  int lam_at(int r) const {
    return r < static_cast<int>(lam.parts.size()) ? lam.parts[r] : 0;
  }

  void fill(int r, int c) {
    int nrows = nu.num_parts();
    if (r == nrows) {
      ++count;
      return;
    }
    if (c < lam_at(r)) {  // row done, start next row at its right end
      fill(r + 1, r + 1 < nrows ? nu.parts[r + 1] - 1 : 0);
      return;
    }
    bool in_above = r > 0 && c < nu.parts[r - 1] && c >= lam_at(r - 1);
    bool has_right = c + 1 < nu.parts[r];
    for (int v = 1; v <= static_cast<int>(mu.parts.size()); ++v) {
      if (used[v] >= mu.parts[v - 1]) continue;
      if (has_right && v > grid[r][c + 1]) continue;   // weak along row
      if (in_above && grid[r - 1][c] >= v) continue;   // strict down column
      if (v > 1 && used[v] >= used[v - 1]) continue;   // lattice prefix
      grid[r][c] = v;
      ++used[v];
      fill(r, c - 1);
      --used[v];
      grid[r][c] = 0;
    }
  }

  Int run() {
    int nrows = nu.num_parts();
    if (nrows == 0) return mu.parts.empty() && lam.parts.empty() ? 1 : 0;
    grid.assign(nrows, {});
    for (int r = 0; r < nrows; ++r) grid[r].assign(nu.parts[r], 0);
    fill(0, nu.parts[0] - 1);
    return count;
  }
};

}  // namespace

Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lam)) return 0;
  LrCounter counter(lam, mu, nu);
  return counter.run();
}

int pieri_coefficient(const Partition& lam, int l, const Partition& nu) {
  if (nu.size() != lam.size() + l) return 0;
  return is_horizontal_strip(nu, lam) ? 1 : 0;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Int symmetric_centralizer(const Partition& lam) {
  Int z = 1;
  for (int i = 1; i <= lam.largest(); ++i) {
    int m = lam.multiplicity(i);
    Int p = 1;
    for (int k = 0; k < m; ++k) p *= i;
    z *= p * factorial(m);
  }
  return z;
}

}  // namespace renner
