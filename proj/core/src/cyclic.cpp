#include "pencil/cyclic.hpp"

#include <sstream>

namespace pencil {

bool ChainDescription::all_minus_two() const {
  for (const auto& chain : chains)
    for (const auto& e : chain)
      if (e != 2) return false;
  return true;
}

namespace {

// Case I/II for gcd(d, a, b) = 1; appends one chain (possibly empty).
void resolve_coprime(const Int& d, const Int& a, const Int& b,
                     ChainDescription& out, std::ostringstream& trail) {
  Int ga = gcd(d, a), gb = gcd(d, b);
  Int d1 = d / (ga * gb), a1 = a / ga, b1 = b / gb;
  if (ga > 1 || gb > 1)
    trail << " II:(" << d1.get_str() << "," << a1.get_str() << "," << b1.get_str() << ")";
  if (d1 == 1) {
    out.chains.push_back({});  // smooth point, explicit A_0
    return;
  }
  // a1*q + b1 == 0 (mod d1); gcd(a1, d1) = gcd(b1, d1) = 1 after reduction.
  Int ar = a1 % d1;
  Int q = (-(b1 % d1) * mod_inverse(ar, d1)) % d1;
  if (q < 0) q += d1;
  Int qp = mod_inverse(q, d1);
  NegContFrac cf = neg_cont_frac(d1, q);
  Rational neg_k2(0);
  for (const auto& e : cf.e) neg_k2 += Rational(e - 2);
  neg_k2 += Rational(q + qp + 2, d1) - Rational(2);
  out.k2 -= neg_k2;
  out.chains.push_back(cf.e);
  trail << " I:(q=" << q.get_str() << ",q'=" << qp.get_str() << ")";
}

}  // namespace

ChainDescription resolve_cyclic(const Int& d, const Int& a, const Int& b) {
  if (d < 2) throw std::domain_error("resolve_cyclic: need d >= 2");
  if (a < 1 || b < 1) throw std::domain_error("resolve_cyclic: need a, b >= 1");
  ChainDescription out;
  out.k2 = Rational(0);
  std::ostringstream trail;
  Int d0 = gcd(gcd(d, a), b);
  trail << "(" << d.get_str() << "," << a.get_str() << "," << b.get_str() << ")";
  if (d0 > 1) trail << " III:" << d0.get_str() << " x (" << Int(d / d0).get_str() << ","
                    << Int(a / d0).get_str() << "," << Int(b / d0).get_str() << ")";
  if (d / d0 == 1) {
    // etale cover (d | a and d | b): d0 smooth points, explicit A_0 chains
    out.chains.assign(static_cast<size_t>(d0.get_ui()), {});
    out.reduction = trail.str() + " etale";
    return out;
  }
  for (Int i = 0; i < d0; ++i) resolve_coprime(d / d0, a / d0, b / d0, out, trail);
  out.reduction = trail.str();
  return out;
}

NodeChains node_chains(const Int& d, const Int& a, const Int& b) {
  if (d < 1 || a < 1 || b < 1) throw std::domain_error("node_chains: positive inputs required");
  if (d % a != 0 || d % b != 0)
    throw std::domain_error("node_chains: a and b must divide d");
  Int count = gcd(a, b);
  Rational n = bracket(a, b) * Rational(d, count) - Rational(1);
  return {count, n.as_integer()};
}

Rational k2_phi(const ResolutionReport& report, const Int& d) {
  if (d < 2) throw std::domain_error("k2_phi: need d >= 2");
  Rational neg_k2(0);
  for (const auto& step : report.steps) {
    Rational term = Rational(step.m - 2) + Rational(gcd(step.m_star, d) - step.m_of(d), d);
    neg_k2 += term * term;
  }
  neg_k2 *= Rational(d);
  for (const auto& node : report.nodes) {
    ChainDescription cd = resolve_cyclic(d, node.a, node.b);
    neg_k2 -= Rational(Int(node.count)) * cd.k2;
  }
  return -neg_k2;
}

Rational k2_phi(const CurveGerm& g, const Int& d) {
  return k2_phi(embedded_resolution(g), d);
}

}  // namespace pencil
