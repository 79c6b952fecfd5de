#include "pencil/poly.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>

namespace pencil {

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& r) {
  UniPoly u;
  if (!r.is_zero()) u.c_.push_back(r);
  return u;
}

const Rational& UniPoly::coeff(int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rational& UniPoly::lead() const {
  if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

Rational UniPoly::eval(const Rational& t) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (size_t i = 1; i < c_.size(); ++i) d.c_.push_back(c_[i] * Rational(Int(i)));
  d.trim();
  return d;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly m = *this;
  Rational l = lead();
  for (auto& r : m.c_) r /= l;
  return m;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
  r.trim();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  UniPoly q, r = a;
  int db = b.degree();
  if (r.degree() >= db) q.c_.assign(r.degree() - db + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= db) {
    int d = r.degree() - db;
    Rational f = r.lead() / b.lead();
    q.c_[d] = f;
    for (int i = 0; i <= db; ++i) r.c_[d + i] -= f * b.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = UniPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r).monic();
  }
  return a.monic();
}

namespace {

// All positive divisors of n > 0 via trial division.
std::vector<Int> divisors(const Int& n) {
  constexpr unsigned long kLimit = 20'000'000UL;
  Int root = sqrt(n);
  if (root > kLimit)
    throw std::runtime_error("rational root search: coefficient too large to enumerate divisors");
  std::vector<Int> divs;
  for (Int d = 1; d <= root; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      Int e = n / d;
      if (e != d) divs.push_back(e);
    }
  }
  return divs;
}

}  // namespace

std::vector<std::pair<Rational, int>> extract_rational_roots(UniPoly& f) {
  std::vector<std::pair<Rational, int>> roots;
  if (f.is_zero()) throw std::domain_error("extract_rational_roots: zero polynomial");
  // Root at 0: strip the power of t.
  {
    int k = 0;
    auto cs = f.coeffs();
    while (k <= f.degree() && f.coeff(k).is_zero()) ++k;
    if (k > 0) {
      std::vector<Rational> rest(cs.begin() + k, cs.end());
      f = UniPoly(std::move(rest));
      roots.push_back({Rational(0), k});
    }
  }
  if (f.degree() < 1) return roots;

  // Integer-primitive form for the rational root bound.
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& r : f.coeffs()) den_lcm = lcm(den_lcm, r.den());
  std::vector<Int> ic;
  for (const auto& r : f.coeffs()) ic.push_back(r.num() * (den_lcm / r.den()));
  for (const auto& n : ic) num_gcd = gcd(num_gcd, n);
  for (auto& n : ic) n /= num_gcd;

  Int a0 = abs(ic.front()), an = abs(ic.back());
  std::vector<Rational> candidates;
  for (const Int& p : divisors(a0))
    for (const Int& q : divisors(an)) {
      candidates.emplace_back(p, q);
      candidates.emplace_back(-p, q);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const Rational& r : candidates) {
    if (!f.eval(r).is_zero()) continue;
    int mult = 0;
    UniPoly lin(std::vector<Rational>{-r, Rational(1)});
    while (true) {
      auto [q, rem] = UniPoly::divmod(f, lin);
      if (!rem.is_zero()) break;
      f = q;
      ++mult;
      if (f.degree() < 1) break;
    }
    roots.push_back({r, mult});
    if (f.degree() < 1) break;
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Poly2 basics
// ---------------------------------------------------------------------------

void Poly2::add_term(const Monomial& m, const Rational& r) {
  if (r.is_zero()) return;
  auto it = c_.find(m);
  if (it == c_.end()) {
    c_.emplace(m, r);
  } else {
    it->second += r;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Poly2 Poly2::constant(const Rational& r) {
  Poly2 p;
  p.add_term({0, 0}, r);
  return p;
}

Poly2 Poly2::var_x() { return monomial(1, 0, Rational(1)); }
Poly2 Poly2::var_y() { return monomial(0, 1, Rational(1)); }

Poly2 Poly2::monomial(int dx, int dy, const Rational& coeff) {
  if (dx < 0 || dy < 0) throw std::domain_error("Poly2: negative exponent");
  Poly2 p;
  p.add_term({dx, dy}, coeff);
  return p;
}

bool Poly2::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == Monomial{0, 0});
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [m, r] : c_) d = std::max(d, m.x + m.y);
  return d;
}

int Poly2::order() const {
  if (c_.empty()) return -1;
  int o = INT32_MAX;
  for (const auto& [m, r] : c_) o = std::min(o, m.x + m.y);
  return o;
}

int Poly2::deg_x() const {
  int d = -1;
  for (const auto& [m, r] : c_) d = std::max(d, m.x);
  return d;
}

int Poly2::deg_y() const {
  int d = -1;
  for (const auto& [m, r] : c_) d = std::max(d, m.y);
  return d;
}

Rational Poly2::coeff(int dx, int dy) const {
  auto it = c_.find({dx, dy});
  return it == c_.end() ? Rational(0) : it->second;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [m, v] : r.c_) v = -v;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, v] : o.c_) add_term(m, v);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, v] : o.c_) add_term(m, -v);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms())
      r.add_term({ma.x + mb.x, ma.y + mb.y}, va * vb);
  return r;
}

Poly2 Poly2::scaled(const Rational& r) const {
  Poly2 p;
  if (r.is_zero()) return p;
  for (const auto& [m, v] : c_) p.c_.emplace(m, v * r);
  return p;
}

Poly2 Poly2::pow(const Int& k) const {
  if (k < 0) throw std::domain_error("Poly2: negative power");
  if (!is_constant() && k > 4096)
    throw std::domain_error("Poly2: exponent too large to expand");
  Poly2 result = constant(Rational(1));
  Poly2 base = *this;
  Int e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Poly2::eval(const Rational& x0, const Rational& y0) const {
  Rational v(0);
  for (const auto& [m, r] : c_) {
    Rational t = r;
    for (int i = 0; i < m.x; ++i) t *= x0;
    for (int i = 0; i < m.y; ++i) t *= y0;
    v += t;
  }
  return v;
}

Poly2 Poly2::derivative_x() const {
  Poly2 d;
  for (const auto& [m, r] : c_)
    if (m.x > 0) d.add_term({m.x - 1, m.y}, r * Rational(Int(m.x)));
  return d;
}

Poly2 Poly2::derivative_y() const {
  Poly2 d;
  for (const auto& [m, r] : c_)
    if (m.y > 0) d.add_term({m.x, m.y - 1}, r * Rational(Int(m.y)));
  return d;
}

Poly2 Poly2::shifted(const Rational& a, const Rational& b) const {
  // f(x + a, y + b) by binomial expansion per monomial.
  auto binomials = [](int n, const Rational& t) {
    // row of (n choose k) t^{n-k} for k = 0..n
    std::vector<Rational> row(n + 1);
    Rational binom(1);
    std::vector<Rational> tp(n + 1);
    tp[0] = Rational(1);
    for (int i = 1; i <= n; ++i) tp[i] = tp[i - 1] * t;
    for (int k = n; k >= 0; --k) {
      row[k] = binom * tp[n - k];
      if (k > 0) binom = binom * Rational(Int(k)) / Rational(Int(n - k + 1));
    }
    return row;
  };
  Poly2 result;
  for (const auto& [m, r] : c_) {
    auto rx = binomials(m.x, a);
    auto ry = binomials(m.y, b);
    for (int i = 0; i <= m.x; ++i) {
      if (rx[i].is_zero()) continue;
      for (int j = 0; j <= m.y; ++j) {
        Rational v = r * rx[i] * ry[j];
        if (!v.is_zero()) result.add_term({i, j}, v);
      }
    }
  }
  return result;
}

Poly2 Poly2::chart1() const {
  Poly2 p;
  for (const auto& [m, r] : c_) p.add_term({m.x + m.y, m.y}, r);
  return p;
}

Poly2 Poly2::chart2() const {
  Poly2 p;
  for (const auto& [m, r] : c_) p.add_term({m.x, m.x + m.y}, r);
  return p;
}

Poly2 Poly2::divide_xpow(int k) const {
  Poly2 p;
  for (const auto& [m, r] : c_) {
    if (m.x < k) throw std::domain_error("Poly2: not divisible by x^" + std::to_string(k));
    p.add_term({m.x - k, m.y}, r);
  }
  return p;
}

Poly2 Poly2::divide_ypow(int k) const {
  Poly2 p;
  for (const auto& [m, r] : c_) {
    if (m.y < k) throw std::domain_error("Poly2: not divisible by y^" + std::to_string(k));
    p.add_term({m.x, m.y - k}, r);
  }
  return p;
}

Poly2 Poly2::lowest_form() const {
  Poly2 p;
  int o = order();
  if (o < 0) return p;
  for (const auto& [m, r] : c_)
    if (m.x + m.y == o) p.add_term(m, r);
  return p;
}

UniPoly Poly2::at_x0() const {
  std::vector<Rational> cs;
  for (const auto& [m, r] : c_) {
    if (m.x != 0) continue;
    if (static_cast<int>(cs.size()) <= m.y) cs.resize(m.y + 1, Rational(0));
    cs[m.y] = r;
  }
  return UniPoly(std::move(cs));
}

UniPoly Poly2::at_y0() const {
  std::vector<Rational> cs;
  for (const auto& [m, r] : c_) {
    if (m.y != 0) continue;
    if (static_cast<int>(cs.size()) <= m.x) cs.resize(m.x + 1, Rational(0));
    cs[m.x] = r;
  }
  return UniPoly(std::move(cs));
}

UniPoly Poly2::as_unipoly_x() const {
  if (deg_y() > 0) throw std::domain_error("Poly2: not univariate in x");
  return at_y0();
}

Poly2 Poly2::from_unipoly_x(const UniPoly& u) {
  Poly2 p;
  for (int i = 0; i <= u.degree(); ++i) p.add_term({i, 0}, u.coeff(i));
  return p;
}

Poly2 Poly2::from_unipoly_y(const UniPoly& u) {
  Poly2 p;
  for (int i = 0; i <= u.degree(); ++i) p.add_term({0, i}, u.coeff(i));
  return p;
}

Poly2 Poly2::normalized() const {
  if (is_zero()) return *this;
  Int den_lcm = 1;
  for (const auto& [m, r] : c_) den_lcm = lcm(den_lcm, r.den());
  Int num_gcd = 0;
  for (const auto& [m, r] : c_) num_gcd = gcd(num_gcd, r.num() * (den_lcm / r.den()));
  Rational scale(den_lcm, num_gcd);
  if ((c_.rbegin()->second * scale).sign() < 0) scale = -scale;
  return scaled(scale);
}

// ---------------------------------------------------------------------------
// Division, gcd, squarefree decomposition
// ---------------------------------------------------------------------------

Poly2 exact_divide(const Poly2& f, const Poly2& g) {
  if (g.is_zero()) throw std::domain_error("exact_divide: division by zero");
  Poly2 q, r = f;
  const auto& gl = *g.c_.rbegin();  // lex-leading term of g
  while (!r.is_zero()) {
    const auto& rl = *r.c_.rbegin();
    if (rl.first.x < gl.first.x || rl.first.y < gl.first.y)
      throw std::domain_error("exact_divide: not divisible");
    Poly2 t = Poly2::monomial(rl.first.x - gl.first.x, rl.first.y - gl.first.y,
                              rl.second / gl.second);
    q += t;
    r -= t * g;
  }
  return q;
}

namespace {

// y-coefficients of f as polynomials in x alone.
std::vector<Poly2> y_coeffs(const Poly2& f) {
  std::vector<Poly2> cs(static_cast<size_t>(std::max(0, f.deg_y() + 1)));
  for (const auto& [m, r] : f.terms()) cs[m.y] += Poly2::monomial(m.x, 0, r);
  return cs;
}

UniPoly content_y(const Poly2& f) {
  UniPoly c;
  for (const auto& cf : y_coeffs(f)) {
    if (cf.is_zero()) continue;
    c = uni_gcd(c, cf.as_unipoly_x());
    if (c.degree() == 0) break;
  }
  return c;  // monic
}

Poly2 primitive_part_y(const Poly2& f) {
  if (f.is_zero()) return f;
  UniPoly c = content_y(f);
  if (c.degree() == 0) return f;
  return exact_divide(f, Poly2::from_unipoly_x(c));
}

// Pseudo-remainder of f by g with respect to y.
Poly2 prem_y(const Poly2& f, const Poly2& g) {
  int dg = g.deg_y();
  auto gcs = y_coeffs(g);
  Poly2 lcg = gcs[dg];
  Poly2 r = f;
  while (!r.is_zero() && r.deg_y() >= dg) {
    int d = r.deg_y();
    Poly2 lcr = y_coeffs(r)[d];
    Poly2 shift = Poly2::monomial(0, d - dg, Rational(1));
    r = lcg * r - lcr * g * shift;
  }
  return r;
}

}  // namespace

Poly2 poly_gcd(const Poly2& f, const Poly2& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  if (f.is_constant() || g.is_constant()) return Poly2::constant(Rational(1));

  const bool fx = f.deg_y() == 0, gx = g.deg_y() == 0;
  if (fx && gx)
    return Poly2::from_unipoly_x(uni_gcd(f.as_unipoly_x(), g.as_unipoly_x())).normalized();
  if (fx) {
    UniPoly c = uni_gcd(f.as_unipoly_x(), content_y(g));
    return Poly2::from_unipoly_x(c).normalized();
  }
  if (gx) return poly_gcd(g, f);

  UniPoly c = uni_gcd(content_y(f), content_y(g));
  Poly2 fp = primitive_part_y(f), gp = primitive_part_y(g);
  if (fp.deg_y() < gp.deg_y()) std::swap(fp, gp);
  Poly2 h;
  while (true) {
    Poly2 r = prem_y(fp, gp);
    if (r.is_zero()) {
      h = gp;
      break;
    }
    if (r.deg_y() == 0) {
      h = Poly2::constant(Rational(1));
      break;
    }
    fp = std::move(gp);
    gp = primitive_part_y(r).normalized();
  }
  return (Poly2::from_unipoly_x(c) * h).normalized();
}

namespace {

// Classical repeated-gcd squarefree split of f with respect to one variable;
// assumes every irreducible factor of f has positive degree in that variable.
void squarefree_loop(const Poly2& f, bool use_y,
                     std::vector<std::pair<Poly2, int>>& out) {
  Poly2 deriv = use_y ? f.derivative_y() : f.derivative_x();
  Poly2 c = poly_gcd(f, deriv);
  Poly2 w = exact_divide(f, c);
  int i = 1;
  while (!w.is_constant()) {
    Poly2 y = poly_gcd(w, c);
    Poly2 fac = exact_divide(w, y);
    if (!fac.is_constant()) out.push_back({fac.normalized(), i});
    w = std::move(y);
    c = exact_divide(c, w);
    ++i;
  }
}

}  // namespace

bool canonical_less(const Poly2& a, const Poly2& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

std::vector<std::pair<Poly2, int>> squarefree_decompose(const Poly2& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
  std::vector<std::pair<Poly2, int>> out;
  if (f.is_constant()) return out;

  UniPoly cont = content_y(f);
  Poly2 pp = exact_divide(f, Poly2::from_unipoly_x(cont));
  if (cont.degree() > 0) squarefree_loop(Poly2::from_unipoly_x(cont), false, out);
  if (!pp.is_constant()) squarefree_loop(pp, true, out);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.first, b.first);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string Poly2::str() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(c_.begin(), c_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.x + a.first.y, tb = b.first.x + b.first.y;
    if (ta != tb) return ta < tb;
    return a.first.x > b.first.x;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, r] : terms) {
    Rational c = r;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    first = false;
    std::string vars;
    if (m.x > 0) vars += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
    if (m.y > 0) {
      if (!vars.empty()) vars += "*";
      vars += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
    }
    if (vars.empty()) {
      os << c.str();
    } else if (c == Rational(1)) {
      os << vars;
    } else {
      os << c.str() << "*" << vars;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Node {
  enum Kind { kNum, kVarX, kVarY, kNeg, kAdd, kSub, kMul, kPow } kind;
  Int num;
  Int exp;
  std::unique_ptr<Node> a, b;
};

using NodePtr = std::unique_ptr<Node>;

struct Token {
  enum Kind { kNum, kX, kY, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kEnd } kind;
  Int num;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t pos = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::kEnd, 0, pos};
      return;
    }
    char c = s_[i_];
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::kNum, Int(s_.substr(i_, j - i_)), pos};
      i_ = j;
      return;
    }
    ++i_;
    switch (c) {
      case 'x': tok_ = {Token::kX, 0, pos}; return;
      case 'y': tok_ = {Token::kY, 0, pos}; return;
      case '+': tok_ = {Token::kPlus, 0, pos}; return;
      case '-': tok_ = {Token::kMinus, 0, pos}; return;
      case '*': tok_ = {Token::kStar, 0, pos}; return;
      case '^': tok_ = {Token::kCaret, 0, pos}; return;
      case '(': tok_ = {Token::kLParen, 0, pos}; return;
      case ')': tok_ = {Token::kRParen, 0, pos}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (lex_.peek().kind != Token::kEnd)
      throw ParseError("trailing input", lex_.peek().pos);
    return e;
  }

 private:
  NodePtr make(Node::Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
  }

  NodePtr expr() {
    NodePtr lhs;
    if (lex_.peek().kind == Token::kMinus) {
      lex_.take();
      auto n = make(Node::kNeg);
      n->a = term();
      lhs = std::move(n);
    } else {
      if (lex_.peek().kind == Token::kPlus) lex_.take();
      lhs = term();
    }
    while (lex_.peek().kind == Token::kPlus || lex_.peek().kind == Token::kMinus) {
      bool plus = lex_.take().kind == Token::kPlus;
      auto n = make(plus ? Node::kAdd : Node::kSub);
      n->a = std::move(lhs);
      n->b = term();
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (lex_.peek().kind == Token::kStar) {
      lex_.take();
      auto n = make(Node::kMul);
      n->a = std::move(lhs);
      n->b = factor();
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (lex_.peek().kind == Token::kCaret) {
      size_t pos = lex_.take().pos;
      if (lex_.peek().kind != Token::kNum)
        throw ParseError("expected integer exponent after '^'", pos);
      Token t = lex_.take();
      if (t.num < 1) throw ParseError("exponent must be a positive integer", t.pos);
      auto n = make(Node::kPow);
      n->a = std::move(base);
      n->exp = t.num;
      return n;
    }
    return base;
  }

  NodePtr atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::kNum: {
        auto n = make(Node::kNum);
        n->num = t.num;
        return n;
      }
      case Token::kX: return make(Node::kVarX);
      case Token::kY: return make(Node::kVarY);
      case Token::kLParen: {
        NodePtr e = expr();
        if (lex_.peek().kind != Token::kRParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return e;
      }
      default:
        throw ParseError("expected a number, variable, or '('", t.pos);
    }
  }

  Lexer lex_;
};

Poly2 expand(const Node& n) {
  switch (n.kind) {
    case Node::kNum: return Poly2::constant(Rational(n.num));
    case Node::kVarX: return Poly2::var_x();
    case Node::kVarY: return Poly2::var_y();
    case Node::kNeg: return -expand(*n.a);
    case Node::kAdd: return expand(*n.a) + expand(*n.b);
    case Node::kSub: return expand(*n.a) - expand(*n.b);
    case Node::kMul: return expand(*n.a) * expand(*n.b);
    case Node::kPow: return expand(*n.a).pow(n.exp);
  }
  throw std::logic_error("expand: bad node");
}

void collect_factors(const Node& n, const Int& mult,
                     std::vector<std::pair<Poly2, Int>>& out) {
  switch (n.kind) {
    case Node::kMul:
      collect_factors(*n.a, mult, out);
      collect_factors(*n.b, mult, out);
      return;
    case Node::kPow:
      collect_factors(*n.a, mult * n.exp, out);
      return;
    case Node::kNeg:
      out.push_back({Poly2::constant(Rational(-1)), mult});
      collect_factors(*n.a, mult, out);
      return;
    default:
      out.push_back({expand(n), mult});
      return;
  }
}

}  // namespace

Poly2 parse_poly(const std::string& text) {
  Parser p(text);
  return expand(*p.parse());
}

std::vector<std::pair<Poly2, Int>> parse_factored(const std::string& text) {
  Parser p(text);
  NodePtr tree = p.parse();
  std::vector<std::pair<Poly2, Int>> out;
  collect_factors(*tree, 1, out);
  return out;
}

}  // namespace pencil
