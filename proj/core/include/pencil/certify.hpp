// Certificate suite: exact-arithmetic evaluation of the inequality and
// equality-characterization claims on computed invariants, with named
// pass / fail / equality-attained verdicts. No tolerances exist anywhere.
#pragma once

#include <string>
#include <vector>

#include "pencil/ledger.hpp"

namespace pencil {

enum class CheckStatus { pass, fail, equality };

struct CheckItem {
  std::string id;
  CheckStatus status;
  Rational lhs, rhs;
  std::string note;         // names an unverified hypothesis, or context
  bool conditional = false; // pass contingent on an unverifiable hypothesis
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool any_fail() const;
  void append(const CheckReport& other);
  std::string render() const;
};

/// Per-fiber checks: c1^2 <= 2c2 (equality iff F = nF_red with at worst
/// nodes, confirmed structurally), c1^2 <= 4g - 4, c2 <= e_F,
/// sum alpha_p <= 2 p_a(F_red), and c1^2 <= c2 when every multiple
/// component is a (-2)-curve.
CheckReport fiber_checks(const FiberInvariants& fi);

/// Slope checks: lambda_F in (0, 8] per non-semistable fiber,
/// lambda_f >= 4 - 4/g, lambda_f > 8 implies semistability, lambda_f > 6
/// implies a multiple non-(-2) component in every non-semistable fiber,
/// the semistable-model slope comparison, and the hyperelliptic upper
/// bound when tagged.
CheckReport slope_checks(const FibrationLedger& ledger);

/// Canonical class inequality K^2 <= (2g-2)(2b-2+3s) for any fibration
/// (equality only for smooth ones), plus the Vojta / Szpiro / EV bounds
/// when the ledger is marked semistable.
CheckReport canonical_class_checks(const FibrationLedger& ledger);

/// Miyaoka's m(E) for an ADE tag: "A1", "D4", "E6", "E7", "E8", ...
Rational miyaoka_m(const std::string& ade);

struct DeltaSharp {
  Rational value;
  bool bound_ok;  // value <= 4g - 3
};

/// delta^# = e_F - (1/3) sum m(E) over declared disjoint ADE curves.
DeltaSharp delta_sharp(const Rational& e_F, const std::vector<std::string>& ades,
                       const Int& g);

/// K^2 <= 3 sum_y delta^#_y + (2g-2) max(2b-2, 0), from per-fiber
/// (e_F, ADE list) declarations.
CheckReport miyaoka_fiber_bound(
    const FibrationLedger& ledger,
    const std::vector<std::pair<Rational, std::vector<std::string>>>& fiber_data);

}  // namespace pencil
