// Jung-Hirzebruch resolution of the cyclic surface singularities
// z^d = x^a y^b, and the K^2 bookkeeping of the degree-d cyclic cover of an
// embedded resolution.
#pragma once

#include <string>
#include <vector>

#include "pencil/resolution.hpp"

namespace pencil {

/// Minimal resolution data of the normalization of z^d = x^a y^b: a
/// disjoint union of chains of rational curves with self-intersections
/// -e_1, ..., -e_r, plus K^2 of the resolution (always <= 0, and 0 exactly
/// on ADE configurations).
struct ChainDescription {
  std::vector<std::vector<Int>> chains;  // entries e_i >= 2; empty chain = A_0
  Rational k2;                           // total over all chains
  std::string reduction;                 // audit trail of the case reductions

  bool all_minus_two() const;
};

/// Cases I-III: splits off gcd(d, a, b) copies, reduces to pairwise-coprime
/// data, and expands d'/q as a negative continued fraction with
/// a'q + b' == 0 (mod d'). Inputs with d' = 1 yield explicit A_0 chains.
ChainDescription resolve_cyclic(const Int& d, const Int& a, const Int& b);

struct NodeChains {
  Int count;   // number of disjoint A_n chains = gcd(a, b)
  Int length;  // n = [a, b] * d / gcd(a, b) - 1
};

/// Chains over a node with branch multiplicities a | d, b | d.
NodeChains node_chains(const Int& d, const Int& a, const Int& b);

/// K^2 of the embedded resolution of the degree-d cyclic cover of the germ:
/// -K^2 = d * sum_i (m_i - 2 + ((m_i*, d) - m_i(d))/d)^2 - sum_q K_q^2,
/// with K_q^2 from resolve_cyclic at each final node. Returns K^2 (<= 0).
Rational k2_phi(const ResolutionReport& report, const Int& d);
Rational k2_phi(const CurveGerm& g, const Int& d);

}  // namespace pencil
