// Embedded resolution of plane curve germs by iterated blow-ups.
//
// The engine tracks the total transform of a germ through a tree of sites
// (infinitely-near points). Each site carries the local equations of the
// curves through it; a site is blown up exactly when it is a singular
// point of the reduced total transform that is not an ordinary double
// point. Blow-up centers are restricted to rational coordinates; a germ
// whose resolution leaves Q raises an error naming the offending curves.
// Conjugate bundles of transversal crossings (simple irrational points on
// an exceptional curve) are recorded as node clusters without leaving Q.
//
// The report records, per blow-up, the multiplicity m of the reduced total
// transform, the multiplicity m* of the total transform, and the per-curve
// partial data needed to evaluate the multiplicity of sum_G gcd(d, n_G)*G
// for any degree d. Final nodes carry the branch multiplicities (a, b).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "pencil/germ.hpp"

namespace pencil {

struct CurveRef {
  enum class Kind { strict_factor, exceptional };
  Kind kind;
  int index;  // factor index within the germ, or exceptional counter
  Int mult;   // multiplicity in the total transform
  std::string label;
};

struct SiteCurve {
  int curve;  // index into ResolutionReport::curves
  Poly2 eq;   // local equation, vanishing at the site
  int ord;    // order of eq at the site
};

struct Site {
  enum class Status { blown, node, cluster, smooth };
  int id = 0;
  int parent = -1;
  int depth = 0;
  Status status = Status::smooth;
  std::vector<SiteCurve> curves;
  int m_red = 0;       // multiplicity of the reduced total transform
  int count = 1;       // number of conjugate points represented (clusters)
  int chart = 0;       // 1 or 2 relative to the parent blow-up, 0 at the root
  Rational coord;      // chart-1 direction t0; 0 for chart-2 origin and root
};

struct ResolutionStep {
  int site;
  Int m;       // multiplicity of the reduced total transform at the center
  Int m_star;  // multiplicity of the total transform at the center
  std::vector<std::pair<Int, int>> partials;  // (curve multiplicity, order)

  /// Multiplicity at this center of sum_G gcd(d, n_G) * G.
  Int m_of(const Int& d) const;
};

struct NodeRecord {
  Int a, b;               // branch multiplicities in the total transform
  int owner_a, owner_b;   // curve indices; equal for a self-node
  int count = 1;          // conjugate copies of this node
  int site;
};

struct ResolutionReport {
  std::vector<CurveRef> curves;  // strict factors first, then exceptionals
  std::vector<ResolutionStep> steps;
  std::vector<NodeRecord> nodes;
  std::vector<Site> sites;

  int strict_count = 0;
  bool is_strict(int curve) const {
    return curves[curve].kind == CurveRef::Kind::strict_factor;
  }
  /// lcm of the multiplicities of all curves in the final configuration.
  Int lcm_multiplicities() const;
  std::string summary() const;
};

struct LocalInvariants {
  Int alpha;      // sum (m_i - 2)^2 over blow-up centers
  Rational beta;  // sum [a_q, b_q] over final nodes
  Int mu;         // Milnor number of the reduced germ
  Int delta;      // delta invariant of the reduced germ
  Int k;          // number of local branches
  Int nu;         // multiplicity of the reduced germ at the origin
};

/// Runs the embedded resolution; deterministic for identical input
/// (chart 1 before chart 2, chart-1 centers ordered by direction).
ResolutionReport embedded_resolution(const CurveGerm& g);

LocalInvariants invariants_from_report(const ResolutionReport& r);
LocalInvariants local_invariants(const CurveGerm& g);

/// Order of vanishing of p at a point (0 if p does not vanish there).
Int multiplicity_at(const Poly2& p, const Rational& x0, const Rational& y0);

/// True iff the reduced germ has multiplicity 2 with two distinct tangent
/// directions (conjugate directions over a quadratic extension count).
bool is_ordinary_double(const Poly2& reduced_germ);

/// Local intersection number of two coprime curves at the origin, by
/// Noether's formula over the common infinitely-near points.
Int intersection_multiplicity(const Poly2& f, const Poly2& g);

struct BlowUpCharts {
  std::vector<Poly2> chart1;  // strict transforms, chart (x, y) -> (x, x*y)
  std::vector<Poly2> chart2;  // strict transforms, chart (x, y) -> (x*y, y)
  Int exc_mult;               // multiplicity of the exceptional curve
};

/// One blow-up of the germ at the origin.
BlowUpCharts blow_up_once(const CurveGerm& g);

// --- subset helpers (per-component data for fiber configurations) ---

/// Delta invariant of the subcurve formed by the flagged strict factors.
Int delta_of_subset(const ResolutionReport& r, const std::vector<bool>& in_subset);
/// Branch count of the subcurve formed by the flagged strict factors.
Int branches_of_subset(const ResolutionReport& r, const std::vector<bool>& in_subset);
/// Local intersection numbers of all pairs of distinct strict factors.
std::map<std::pair<int, int>, Int> strict_pair_intersections(const ResolutionReport& r);

}  // namespace pencil
