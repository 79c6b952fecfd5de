// Bivariate polynomial arithmetic over Q: sparse polynomials in x, y with
// exact rational coefficients, univariate helpers, gcd / squarefree
// machinery, and the germ expression parser.
//
// Grammar accepted by the parser: integer coefficients, +, -, *, ^,
// parentheses, variables x and y. Example: "(x^2+y^3)^2 * y".
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pencil/rational.hpp"

namespace pencil {

/// Dense univariate polynomial over Q; c[i] is the coefficient of t^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& r);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int i) const;
  const Rational& lead() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly uni_gcd(UniPoly a, UniPoly b);  // monic

/// Distinct rational roots with multiplicities; on return f has been divided
/// by the corresponding linear factors (the non-rational cofactor remains).
std::vector<std::pair<Rational, int>> extract_rational_roots(UniPoly& f);

struct Monomial {
  int x = 0;
  int y = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse bivariate polynomial over Q. No zero coefficients are stored.
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 constant(const Rational& r);
  static Poly2 var_x();
  static Poly2 var_y();
  static Poly2 monomial(int dx, int dy, const Rational& coeff);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Order: minimal total degree of a monomial; -1 for zero.
  int order() const;
  int deg_x() const;
  int deg_y() const;
  const std::map<Monomial, Rational>& terms() const { return c_; }
  Rational coeff(int dx, int dy) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 scaled(const Rational& r) const;
  Poly2 pow(const Int& k) const;
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

  Rational eval(const Rational& x0, const Rational& y0) const;
  Poly2 derivative_x() const;
  Poly2 derivative_y() const;

  /// f(x + a, y + b).
  Poly2 shifted(const Rational& a, const Rational& b) const;
  /// Blow-up chart substitutions: chart 1 maps (x, y) -> (x, x*y),
  /// chart 2 maps (x, y) -> (x*y, y). Both are monomial maps.
  Poly2 chart1() const;
  Poly2 chart2() const;
  /// Exact division by x^k resp. y^k; throws if not divisible.
  Poly2 divide_xpow(int k) const;
  Poly2 divide_ypow(int k) const;

  /// Homogeneous part of lowest total degree (the tangent cone form).
  Poly2 lowest_form() const;

  /// Restriction f(0, t) resp. f(t, 0) as a univariate polynomial.
  UniPoly at_x0() const;
  UniPoly at_y0() const;
  /// Conversion for polynomials of y-degree 0 (univariate in x).
  UniPoly as_unipoly_x() const;
  static Poly2 from_unipoly_x(const UniPoly& u);
  static Poly2 from_unipoly_y(const UniPoly& u);

  /// Canonical associate: integer coefficients with content 1 and positive
  /// leading (lex) coefficient.
  Poly2 normalized() const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& r);
  std::map<Monomial, Rational> c_;

  friend Poly2 exact_divide(const Poly2& f, const Poly2& g);
};

/// Exact polynomial division; throws std::domain_error if g does not
/// divide f.
Poly2 exact_divide(const Poly2& f, const Poly2& g);

Poly2 poly_gcd(const Poly2& f, const Poly2& g);

/// Squarefree decomposition f = unit * prod h_i^{m_i} with the h_i
/// squarefree, pairwise coprime, canonically normalized and ordered.
std::vector<std::pair<Poly2, int>> squarefree_decompose(const Poly2& f);

/// Deterministic ordering on canonical polynomials (degree, then terms).
bool canonical_less(const Poly2& a, const Poly2& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  size_t pos;
};

/// Fully expanded polynomial of the expression.
Poly2 parse_poly(const std::string& text);

/// Parses keeping the written product/power structure: the result is a list
/// of (base polynomial, exponent) with sums expanded but products not
/// multiplied out.
std::vector<std::pair<Poly2, Int>> parse_factored(const std::string& text);

}  // namespace pencil
