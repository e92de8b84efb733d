#ifndef RENNER_QPOLY_HPP
#define RENNER_QPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "renner/errors.hpp"

namespace renner {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// Univariate polynomial in q over the rationals. Coefficients low-to-high,
// no trailing zeros (the zero polynomial has an empty coefficient list).
class QPoly {
 public:
  QPoly() = default;
  QPoly(int c) { if (c != 0) coeffs_.push_back(Rat(c)); }                   // NOLINT
  QPoly(const Rat& c) { if (c != 0) coeffs_.push_back(c); }                 // NOLINT
  explicit QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPoly q_power(int k, const Rat& scale = Rat(1));  // scale * q^k
  static QPoly q() { return q_power(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rat(0);
  }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  bool is_constant() const { return coeffs_.size() <= 1; }
  Rat constant_value() const { return coeff(0); }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { *this = *this + o; return *this; }
  QPoly& operator-=(const QPoly& o) { *this = *this - o; return *this; }
  QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // Exact evaluation at a rational point.
  Rat evaluate(const Rat& x) const;

  // Quotient and remainder; divisor must be nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  // Exact division; throws DivisionByZero if b == 0, NonPolynomialEntry if remainder nonzero.
  QPoly divide_exact(const QPoly& b) const;
  // Monic gcd.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  // Human-readable form, highest degree first: "q^4-q^2", "2q^2-q", "-1".
  std::string to_string() const;
  // Inverse of to_string (signs, rational coefficients, q^k monomials).
  static QPoly parse(const std::string& s);

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

// Rational function in q: num/den, reduced, monic denominator.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(int c) : num_(c), den_(1) {}                    // NOLINT
  QRat(const Rat& c) : num_(c), den_(1) {}             // NOLINT
  QRat(const QPoly& p) : num_(p), den_(1) {}           // NOLINT
  QRat(QPoly num, QPoly den);

  static QRat q() { return QRat(QPoly::q()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_.coeff(0) == 1; }
  // Returns the polynomial value; throws NonPolynomialEntry otherwise.
  QPoly to_polynomial(const std::string& where = "") const;

  QRat operator-() const { return QRat(-num_, den_, no_reduce_tag{}); }
  QRat operator+(const QRat& o) const;
  QRat operator-(const QRat& o) const;
  QRat operator*(const QRat& o) const;
  QRat operator/(const QRat& o) const;
  QRat& operator+=(const QRat& o) { *this = *this + o; return *this; }
  QRat& operator-=(const QRat& o) { *this = *this - o; return *this; }
  QRat& operator*=(const QRat& o) { *this = *this * o; return *this; }
  QRat& operator/=(const QRat& o) { *this = *this / o; return *this; }
  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRat& o) const { return !(*this == o); }

  // Exact evaluation; throws PoleAtValue when the denominator vanishes.
  Rat specialize(const Rat& value) const;

  std::string to_string() const;
  // Inverse of to_string: a polynomial, "(num)/(den)", "(num)/d" or "n/(den)".
  static QRat parse(const std::string& s);

 private:
  struct no_reduce_tag {};
  QRat(QPoly num, QPoly den, no_reduce_tag) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();
  QPoly num_, den_;
};

}  // namespace renner

#endif
