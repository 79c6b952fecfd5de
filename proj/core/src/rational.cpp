#include "pencil/rational.hpp"

namespace pencil {

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Int Rational::as_integer() const {
  if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
  return v_.get_num();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  return v_.get_str();
}

std::string Rational::decimal(int digits) const {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int n = num() * scale, d = den();
  Int q = n / d, r = n % d;
  // round half away from zero
  if (2 * ::abs(r) >= d) q += (sgn(n) < 0 ? -1 : 1);
  bool neg = q < 0;
  Int aq = ::abs(q);
  Int ip = aq / scale, fp = aq % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

Rational Rational::parse(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw std::invalid_argument("Rational: malformed number '" + s + "'");
    return Rational(Int(s));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!is_int(n) || !is_int(d))
    throw std::invalid_argument("Rational: malformed fraction '" + s + "'");
  Int den(d);
  if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  return Rational(Int(n), den);
}

std::string str(const Int& n) { return n.get_str(); }

Rational bracket(const Int& a, const Int& b) {
  if (a <= 0 || b <= 0) throw std::domain_error("bracket: arguments must be positive");
  Int g = gcd(a, b);
  return Rational(g * g, a * b);
}

Rational NegContFrac::value() const {
  if (e.empty()) throw std::domain_error("NegContFrac: empty expansion");
  Rational v(e.back());
  for (auto it = e.rbegin() + 1; it != e.rend(); ++it)
    v = Rational(*it) - Rational(1) / v;
  return v;
}

NegContFrac neg_cont_frac(const Int& d, const Int& q) {
  if (q <= 0 || q >= d) throw std::domain_error("neg_cont_frac: need 0 < q < d");
  if (gcd(d, q) != 1) throw std::domain_error("neg_cont_frac: d and q must be coprime");
  NegContFrac cf;
  Int a = d, b = q;
  while (b > 0) {
    Int e = (a + b - 1) / b;  // ceil(a/b)
    cf.e.push_back(e);
    Int next = e * b - a;
    a = b;
    b = next;
  }
  return cf;
}

Int mod_inverse(const Int& q, const Int& d) {
  if (q <= 0 || q >= d) throw std::domain_error("mod_inverse: need 0 < q < d");
  Int r;
  if (mpz_invert(r.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: arguments are not coprime");
  return r;
}

}  // namespace pencil
