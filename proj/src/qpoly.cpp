#include "renner/qpoly.hpp"

#include <cctype>
#include <sstream>

namespace renner {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int den(s.substr(slash + 1));
    if (den == 0) throw DivisionByZero("rational literal " + s);
    return Rat(Int(s.substr(0, slash)), den);
  } catch (const std::exception& e) {
    throw ParseError("bad rational '" + s + "': " + e.what());
  }
}

QPoly QPoly::q_power(int k, const Rat& scale) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = scale;
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x = -x;
  return QPoly(std::move(c));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return QPoly(std::move(c));
}

Rat QPoly::evaluate(const Rat& x) const {
  Rat v(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rat> r = a.coeffs_;
  int db = b.degree();
  std::vector<Rat> qc;
  if (static_cast<int>(r.size()) - 1 >= db) qc.assign(r.size() - db, Rat(0));
  for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
    if (r[d] == 0) continue;
    Rat f = r[d] / b.coeffs_[db];
    qc[d - db] = f;
    for (int j = 0; j <= db; ++j) r[d - db + j] -= f * b.coeffs_[j];
  }
  quot = QPoly(std::move(qc));
  rem = QPoly(std::move(r));
}

QPoly QPoly::divide_exact(const QPoly& b) const {
  QPoly quot, rem;
  divmod(*this, b, quot, rem);
  if (!rem.is_zero())
    throw NonPolynomialEntry("(" + to_string() + ") not divisible by (" + b.to_string() + ")");
  return quot;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly quot, rem;
    divmod(x, y, quot, rem);
    x = y;
    y = rem;
  }
  if (x.is_zero()) return x;
  // monic normalization
  std::vector<Rat> c = x.coeffs_;
  Rat lead = c.back();
  for (auto& v : c) v /= lead;
  return QPoly(std::move(c));
}

namespace {
// One monomial, display style: 1 -> "1", q -> "q", -q^2 -> "-q^2", 1/2 q -> "1/2q".
void append_monomial(std::ostringstream& os, const Rat& c, int deg, bool first) {
  Rat a = c < 0 ? Rat(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? "-" : "+");
  }
  bool coeff_is_one = (a == 1);
  if (deg == 0 || !coeff_is_one) os << rat_to_string(a);
  if (deg >= 1) {
    os << "q";
    if (deg >= 2) os << "^" << deg;
  }
}
}  // namespace

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    if (coeffs_[d] == 0) continue;
    append_monomial(os, coeffs_[d], d, first);
    first = false;
  }
  return os.str();
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  reduce();
}

void QRat::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    num_ = num_ * QPoly(Rat(1) / lead);
    den_ = den_ * QPoly(Rat(1) / lead);
  }
}

QPoly QRat::to_polynomial(const std::string& where) const {
  if (!is_polynomial())
    throw NonPolynomialEntry(to_string() + (where.empty() ? "" : " at " + where));
  return num_;
}

QRat QRat::operator+(const QRat& o) const {
  return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
QRat QRat::operator-(const QRat& o) const {
  return QRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
QRat QRat::operator*(const QRat& o) const { return QRat(num_ * o.num_, den_ * o.den_); }
QRat QRat::operator/(const QRat& o) const {
  if (o.is_zero()) throw DivisionByZero("division of rational functions by zero");
  return QRat(num_ * o.den_, den_ * o.num_);
}

Rat QRat::specialize(const Rat& value) const {
  Rat d = den_.evaluate(value);
  if (d == 0) throw PoleAtValue(to_string() + " at q=" + rat_to_string(value));
  return num_.evaluate(value) / d;
}

QPoly QPoly::parse(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty polynomial literal");
  if (s == "0") return QPoly();

  std::vector<Rat> coeffs;
  auto add = [&coeffs](int deg, const Rat& c) {
    if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, Rat(0));
    coeffs[deg] += c;
  };
  auto digits = [&s](size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };

  size_t i = 0;
  bool neg = false;
  if (s[i] == '-') {
    neg = true;
    ++i;
  } else if (s[i] == '+') {
    ++i;
  }
  while (i < s.size()) {
    std::string whole = digits(i);
    std::string frac;
    if (i < s.size() && s[i] == '/') {
      ++i;
      frac = digits(i);
      if (whole.empty() || frac.empty())
        throw ParseError("bad coefficient in '" + input + "'");
    }
    Rat c = whole.empty()
                ? Rat(1)
                : (frac.empty() ? Rat(Int(whole)) : Rat(Int(whole), Int(frac)));
    int deg = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e = digits(i);
        if (e.empty()) throw ParseError("bad exponent in '" + input + "'");
        deg = std::stoi(e);
      }
    } else if (whole.empty()) {
      throw ParseError("expected a monomial in '" + input + "'");
    }
    add(deg, neg ? Rat(-c) : c);
    if (i == s.size()) break;
    if (s[i] == '+')
      neg = false;
    else if (s[i] == '-')
      neg = true;
    else
      throw ParseError("unexpected '" + std::string(1, s[i]) + "' in '" +
                       input + "'");
    ++i;
    if (i == s.size()) throw ParseError("dangling sign in '" + input + "'");
  }
  return QPoly(std::move(coeffs));
}

QRat QRat::parse(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty value literal");

  auto strip_parens = [&input](const std::string& part) {
    if (part.size() >= 2 && part.front() == '(' && part.back() == ')')
      return part.substr(1, part.size() - 2);
    if (part.find('(') != std::string::npos ||
        part.find(')') != std::string::npos)
      throw ParseError("unbalanced parentheses in '" + input + "'");
    return part;
  };

  size_t split = s.find(")/(");
  if (split != std::string::npos)
    return QRat(QPoly::parse(strip_parens(s.substr(0, split + 1))),
                QPoly::parse(strip_parens(s.substr(split + 2))));
  if (!s.empty() && s.front() == '(') {
    size_t close = s.find(")/");
    if (close == std::string::npos)
      throw ParseError("expected ')/': '" + input + "'");
    return QRat(QPoly::parse(s.substr(1, close - 1)),
                QPoly::parse(s.substr(close + 2)));
  }
  split = s.find("/(");
  if (split != std::string::npos)
    return QRat(QPoly::parse(s.substr(0, split)),
                QPoly::parse(strip_parens(s.substr(split + 1))));
  return QRat(QPoly::parse(s));
}

std::string QRat::to_string() const {
  if (is_polynomial()) return num_.to_string();
  // Clear coefficient denominators so fractions print integrally: (q-1)/2.
  Int lcm_all(1);
  for (const auto& c : num_.coeffs()) lcm_all = lcm(lcm_all, denominator(c));
  for (const auto& c : den_.coeffs()) lcm_all = lcm(lcm_all, denominator(c));
  QPoly n = num_ * QPoly(Rat(lcm_all));
  QPoly d = den_ * QPoly(Rat(lcm_all));
  std::string ns = n.to_string(), ds = d.to_string();
  std::string lhs = (n.degree() > 0) ? "(" + ns + ")" : ns;
  std::string rhs = (d.degree() > 0) ? "(" + ds + ")" : ds;
  return lhs + "/" + rhs;
}

}  // namespace renner
