#include "renner/partial_perm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace renner {

PartialPerm::PartialPerm(std::vector<int> image) : image_(std::move(image)) {
  int m = degree();
  std::vector<bool> seen(m + 1, false);
  for (int v : image_) {
    if (v < 0 || v > m) throw ParseError("image value out of range");
    if (v != 0) {
      if (seen[v]) throw ParseError("image values must be distinct");
      seen[v] = true;
    }
  }
}

PartialPerm PartialPerm::identity(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = i + 1;
  return PartialPerm(std::move(img));
}

PartialPerm PartialPerm::zero(int m) {
  return PartialPerm(std::vector<int>(m, 0));
}

PartialPerm PartialPerm::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = i + 1;
  for (const auto& cyc : cycles) {
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j];
      int to = cyc[(j + 1) % cyc.size()];
      if (from < 1 || from > m || to < 1 || to > m)
        throw ParseError("cycle point out of range");
      img[from - 1] = to;
    }
  }
  return PartialPerm(std::move(img));
}

int PartialPerm::apply(int i) const {
  if (i < 1 || i > degree()) throw ParseError("point out of range");
  return image_[i - 1];
}

int PartialPerm::rank() const {
  return static_cast<int>(std::count_if(image_.begin(), image_.end(),
                                        [](int v) { return v != 0; }));
}

std::vector<int> PartialPerm::domain() const {
  std::vector<int> d;
  for (int i = 1; i <= degree(); ++i)
    if (image_[i - 1] != 0) d.push_back(i);
  return d;
}

std::vector<int> PartialPerm::range() const {
  std::vector<int> r;
  for (int v : image_)
    if (v != 0) r.push_back(v);
  std::sort(r.begin(), r.end());
  return r;
}

PartialPerm PartialPerm::operator*(const PartialPerm& o) const {
  if (degree() != o.degree()) throw ParseError("degree mismatch in composition");
  std::vector<int> img(degree(), 0);
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != 0) img[i] = o.image_[image_[i] - 1];
  return PartialPerm(std::move(img));
}

PartialPerm PartialPerm::inverse() const {
  std::vector<int> img(degree(), 0);
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != 0) img[image_[i] - 1] = i + 1;
  return PartialPerm(std::move(img));
}

PartialPerm PartialPerm::restrict(const std::vector<int>& K) const {
  std::vector<int> img(degree(), 0);
  for (int i : K) {
    if (i < 1 || i > degree()) throw ParseError("restriction point out of range");
    img[i - 1] = image_[i - 1];
  }
  return PartialPerm(std::move(img));
}

std::string PartialPerm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ',';
    os << image_[i];
  }
  os << ']';
  return os.str();
}

PartialPerm PartialPerm::parse(const std::string& s, int expected_degree) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced brackets in '" + s + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> img;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size()) throw ParseError("trailing junk in '" + tok + "'");
      img.push_back(v);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad image entry '" + tok + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("image entry out of range '" + tok + "'");
    }
  }
  if (expected_degree >= 0 && static_cast<int>(img.size()) != expected_degree)
    throw ParseError("expected " + std::to_string(expected_degree) + " image entries, got " +
                     std::to_string(img.size()));
  return PartialPerm(std::move(img));
}

int bar(int i, int m) {
  if (i < 1 || i > m) throw ParseError("bar: point out of range");
  return m + 1 - i;
}

bool is_admissible(const std::vector<int>& K, int m) {
  if (static_cast<int>(K.size()) == m) return true;
  std::set<int> s(K.begin(), K.end());
  for (int i : s)
    if (s.count(bar(i, m))) return false;
  return true;
}

namespace {

// Entries of A^t J A (resp. A J A^t) for partial permutation matrix A and
// the antidiagonal form J with J[i][bar(i)] = 1. A has A[sigma(i)][i] = 1
// when columns index domain points. (A^t J A)[x][y] = J[sigma(x)][sigma(y)].
bool matrix_criterion_half(const PartialPerm& sigma) {
  int m = sigma.degree();
  std::map<std::pair<int, int>, int> prod;  // sparse m x m matrix
  for (int x = 1; x <= m; ++x) {
    int sx = sigma.apply(x);
    if (sx == 0) continue;
    int y_target = 0;
    for (int y = 1; y <= m; ++y)
      if (sigma.apply(y) == bar(sx, m)) y_target = y;
    if (y_target != 0) prod[{x, y_target}] = 1;
  }
  if (prod.empty()) return true;  // the zero matrix
  // Otherwise must equal J exactly: entries 1 precisely at (i, bar(i)).
  if (static_cast<int>(prod.size()) != m) return false;
  for (int i = 1; i <= m; ++i)
    if (!prod.count({i, bar(i, m)})) return false;
  return true;
}

bool matrix_criterion(const PartialPerm& sigma) {
  return matrix_criterion_half(sigma) && matrix_criterion_half(sigma.inverse());
}

bool admissible_criterion(const PartialPerm& sigma) {
  int m = sigma.degree();
  std::vector<int> dom = sigma.domain();
  std::vector<int> ran = sigma.range();
  if (static_cast<int>(dom.size()) == m) {
    // Full-rank case: must commute with the bar involution.
    for (int i = 1; i <= m; ++i)
      if (sigma.apply(bar(i, m)) != bar(sigma.apply(i), m)) return false;
    return true;
  }
  return is_admissible(dom, m) && is_admissible(ran, m);
}

}  // namespace

bool is_symplectic(const PartialPerm& sigma) {
  if (sigma.degree() % 2 != 0)
    throw ParseError("symplectic test requires even degree");
  bool by_sets = admissible_criterion(sigma);
  bool by_matrix = matrix_criterion(sigma);
  if (by_sets != by_matrix)
    throw DefinitionMismatch("admissible-set and matrix criteria disagree on " +
                             sigma.to_string());
  return by_sets;
}

OmegaDecomposition omega_circle(const PartialPerm& sigma) {
  int m = sigma.degree();
  // i is recurrent iff iterating sigma from i never hits 0; with finitely
  // many points that happens iff the forward orbit of i returns to i.
  std::vector<int> recurrent;
  for (int i = 1; i <= m; ++i) {
    int x = i;
    bool back = false;
    for (int step = 0; step < m + 1; ++step) {
      x = sigma.apply(x);
      if (x == 0) break;
      if (x == i) {
        back = true;
        break;
      }
    }
    if (back) recurrent.push_back(i);
  }
  OmegaDecomposition d;
  d.recurrent = recurrent;
  d.circ = sigma.restrict(recurrent);
  std::vector<int> rest;
  for (int i : sigma.domain())
    if (!std::binary_search(recurrent.begin(), recurrent.end(), i)) rest.push_back(i);
  d.nilpotent = sigma.restrict(rest);
  return d;
}

std::vector<std::vector<int>> cycle_sets(const PartialPerm& sigma, int t,
                                         bool admissible_needed) {
  OmegaDecomposition d = omega_circle(sigma);
  const std::vector<int>& pts = d.recurrent;
  // Orbits of sigma on the recurrent points; K must be a union of orbits.
  std::vector<std::vector<int>> orbits;
  std::set<int> seen;
  for (int i : pts) {
    if (seen.count(i)) continue;
    std::vector<int> orbit;
    int x = i;
    do {
      orbit.push_back(x);
      seen.insert(x);
      x = sigma.apply(x);
    } while (x != i);
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::vector<std::vector<int>> result;
  int no = static_cast<int>(orbits.size());
  if (no > 20) throw UnsupportedSize("too many orbits for subset enumeration");
  for (int mask = 0; mask < (1 << no); ++mask) {
    std::vector<int> K;
    for (int j = 0; j < no; ++j)
      if (mask & (1 << j)) K.insert(K.end(), orbits[j].begin(), orbits[j].end());
    if (static_cast<int>(K.size()) != t) continue;
    std::sort(K.begin(), K.end());
    if (admissible_needed && !is_admissible(K, sigma.degree())) continue;
    result.push_back(std::move(K));
  }
  std::sort(result.begin(), result.end());
  return result;
}

Partition restricted_cycle_type(const PartialPerm& sigma, const std::vector<int>& K) {
  std::vector<int> sorted(K);
  std::sort(sorted.begin(), sorted.end());
  std::set<int> kset(sorted.begin(), sorted.end());
  for (int i : sorted) {
    int v = sigma.apply(i);
    if (v == 0 || !kset.count(v))
      throw InvalidK("K is not setwise fixed by sigma");
  }
  // Conjugation by the order-preserving bijection {1..t} -> K preserves
  // cycle lengths, so read them off directly on K.
  std::vector<int> parts;
  std::set<int> seen;
  for (int i : sorted) {
    if (seen.count(i)) continue;
    int len = 0;
    int x = i;
    do {
      seen.insert(x);
      ++len;
      x = sigma.apply(x);
    } while (x != i);
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

Partition cycle_type(const PartialPerm& w) {
  if (!w.is_total()) throw ParseError("cycle_type requires a total permutation");
  std::vector<int> all(w.degree());
  for (int i = 0; i < w.degree(); ++i) all[i] = i + 1;
  return restricted_cycle_type(w, all);
}

BiPartition signed_cycle_type(const PartialPerm& w) {
  int m = w.degree();
  if (m % 2 != 0 || !w.is_total())
    throw ParseError("signed_cycle_type requires a total even-degree permutation");
  for (int i = 1; i <= m; ++i)
    if (w.apply(bar(i, m)) != bar(w.apply(i), m))
      throw ParseError("signed_cycle_type requires bar-equivariance");
  std::vector<int> gamma, delta;
  std::set<int> seen;
  for (int i = 1; i <= m; ++i) {
    if (seen.count(i)) continue;
    std::vector<int> orbit;
    int x = i;
    do {
      orbit.push_back(x);
      seen.insert(x);
      x = w.apply(x);
    } while (x != i);
    bool bar_closed = false;
    for (int y : orbit)
      if (y == bar(orbit.front(), m)) bar_closed = true;
    if (bar_closed) {
      delta.push_back(static_cast<int>(orbit.size()) / 2);
    } else {
      gamma.push_back(static_cast<int>(orbit.size()));
      for (int y : orbit) seen.insert(bar(y, m));  // consume the mirror orbit
    }
  }
  std::sort(gamma.rbegin(), gamma.rend());
  std::sort(delta.rbegin(), delta.rend());
  BiPartition b;
  b.positive = Partition(gamma);
  b.negative = Partition(delta);
  return b;
}

}  // namespace renner
