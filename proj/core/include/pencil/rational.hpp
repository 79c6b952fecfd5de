// Exact arithmetic kernel: arbitrary-precision integers and rationals,
// gcd/lcm, the bracket [a,b] = gcd(a,b)^2/(ab), negative continued
// fractions, and modular inverses. No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pencil {

using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Exact rational number, always stored in lowest terms with positive
/// denominator. Arithmetic is total except division by zero.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);

  const Int num() const { return v_.get_num(); }
  const Int den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  /// Integer value; throws if the denominator is not 1.
  Int as_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Canonical rendering: "n" when the denominator is 1, else "n/d".
  std::string str() const;
  /// Decimal rendering to `digits` places, for human-readable reports only.
  std::string decimal(int digits = 6) const;
  /// Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
  static Rational parse(const std::string& s);

 private:
  mpq_class v_;  // kept canonical
};

std::string str(const Int& n);

/// [a, b] = (a, b)^2 / (ab) for positive integers a, b.
Rational bracket(const Int& a, const Int& b);

/// Negative continued fraction expansion d/q = e1 - 1/(e2 - 1/(...)),
/// all terms >= 2. Unique for 0 < q < d with gcd(d, q) = 1.
struct NegContFrac {
  std::vector<Int> e;

  /// Re-evaluates the nested fraction; the defining exactness oracle.
  Rational value() const;
};

NegContFrac neg_cont_frac(const Int& d, const Int& q);

/// Returns q' with 0 < q' < d and q*q' == 1 (mod d). Requires gcd(q, d) = 1.
Int mod_inverse(const Int& q, const Int& d);

}  // namespace pencil
