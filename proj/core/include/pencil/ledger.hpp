// Fibration-level ledger: base-change invariants, the composition law,
// isotriviality invariants, semistable-model slope and Horikawa-number
// arithmetic.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/fiber.hpp"

namespace pencil {

/// Numerical summary of one singular fiber, as stored in ledger files.
struct FiberSummary {
  std::string name;
  Rational c1sq, c2, chi;
  bool semistable = false;
  std::optional<Int> M;  // lcm of multiplicities in F', when known
  std::optional<Int> e;  // e_F, when known
  std::optional<bool> nodes_only_multiple;   // F = n F_red with at worst nodes
  std::optional<bool> mult_comps_minus_two;  // multiple components all (-2)

  std::optional<Rational> lambda() const {
    if (chi.is_zero()) return std::nullopt;
    return c1sq / chi;
  }
  static FiberSummary from(const FiberInvariants& fi, const std::string& name);
};

struct FibrationLedger {
  std::string name;
  Int g = 2;  // fiber genus
  Int b = 0;  // base genus
  Rational chi_f, K2_f, e_f;
  Int s = 0;  // number of singular fibers
  std::vector<FiberSummary> fibers;
  bool semistable = false;
  bool hyperelliptic = false;

  /// Noether equality, nonnegativity, fiber count consistency.
  void validate() const;
};

struct RamificationPoint {
  int fiber = -1;  // index into ledger.fibers; -1 for a smooth fiber
  std::vector<Int> profile;  // ramification indices, a partition of d
  // Pullback fiber data per profile part, for non-stabilizing parts that
  // the ledger cannot derive (never invented by the tool).
  std::vector<std::optional<FiberSummary>> pullback;
};

struct BaseChangeSpec {
  Int d = 1;
  std::vector<RamificationPoint> branch;
};

struct BaseChangeInvariants {
  Rational K2, e, chi;
  bool stabilizing = false;
  std::optional<Rational> lambda;    // K2 / chi when chi > 0
  std::optional<Int> cover_genus;    // genus of the covering curve
};

/// Exact evaluation of a base change against a ledger. Stabilizing
/// parts contribute zero pullback terms; unramified parts contribute the
/// fiber's own invariants; anything else requires supplied pullback data.
BaseChangeInvariants stabilizing_invariants(const FibrationLedger& ledger,
                                            const BaseChangeSpec& spec);

/// Composition law: K^2 = K^2_1 + K^2_2 / deg(pi_1), likewise e and chi.
BaseChangeInvariants compose(const BaseChangeInvariants& outer, const Int& outer_degree,
                             const BaseChangeInvariants& inner);

struct IsotrivialityInvariants {
  Rational I_K, I_chi, I_e;
  bool isotrivial;  // I_K = 0 or I_chi = 0
};

IsotrivialityInvariants isotriviality_invariants(const FibrationLedger& ledger);

/// Slope of every semistable model: I_K / I_chi. Throws when isotrivial.
Rational semistable_slope(const FibrationLedger& ledger);

/// H_{F~} = d * (H_F + (c2(F) - 3 c1^2(F)) / 4)   (genus-3 context).
Rational horikawa_shift(const Rational& H_F, const FiberSummary& fi, const Int& d);

/// Exact test of K_f^2 - 3 chi_f = sum H_F; defect receives lhs - rhs.
bool reid_sum_check(const FibrationLedger& ledger, const std::vector<Rational>& H_values,
                    Rational* defect = nullptr);

/// Ledger of the pullback fibration constructed from a stabilizing spec:
/// scaled invariants, Riemann-Hurwitz base genus, and the pullback singular
/// fiber list (d copies of each unbranched fiber, per-part copies over
/// branched ones).
FibrationLedger pullback_ledger(const FibrationLedger& ledger, const BaseChangeSpec& spec);

}  // namespace pencil
