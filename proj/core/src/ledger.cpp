#include "pencil/ledger.hpp"

#include <set>

namespace pencil {

FiberSummary FiberSummary::from(const FiberInvariants& fi, const std::string& name) {
  FiberSummary s;
  s.name = name;
  s.c1sq = fi.c1sq;
  s.c2 = fi.c2;
  s.chi = fi.chi;
  s.semistable = fi.semistable;
  s.e = fi.e;
  s.nodes_only_multiple = fi.n_fred_with_nodes_only;
  s.mult_comps_minus_two = fi.mult_comps_all_minus_two;
  return s;
}

void FibrationLedger::validate() const {
  if (g < 1) throw std::domain_error("ledger: fiber genus must be >= 1");
  if (b < 0) throw std::domain_error("ledger: base genus must be >= 0");
  if (Rational(12) * chi_f != K2_f + e_f)
    throw std::domain_error("ledger: Noether equality 12 chi_f = K_f^2 + e_f fails (" +
                            chi_f.str() + ", " + K2_f.str() + ", " + e_f.str() + ")");
  if (chi_f.sign() < 0 || K2_f.sign() < 0 || e_f.sign() < 0)
    throw std::domain_error("ledger: relative invariants must be nonnegative");
  Int nonss = 0;
  for (const auto& f : fibers) {
    if (Rational(12) * f.chi != f.c1sq + f.c2)
      throw std::domain_error("ledger: fiber '" + f.name + "' violates 12 chi = c1^2 + c2");
    if (f.semistable && (!f.c1sq.is_zero() || !f.c2.is_zero()))
      throw std::domain_error("ledger: semistable fiber '" + f.name +
                              "' with nonzero invariants");
    if (!f.semistable) nonss += 1;
  }
  if (Int(s) < Int(fibers.size()))
    throw std::domain_error("ledger: s is smaller than the number of listed fibers");
  if (semistable && nonss > 0)
    throw std::domain_error("ledger: marked semistable but lists non-semistable fibers");
}

namespace {

struct Triple {
  Rational K2, e, chi;
  Triple& operator+=(const Triple& o) {
    K2 += o.K2;
    e += o.e;
    chi += o.chi;
    return *this;
  }
};

Triple of(const FiberSummary& f) { return {f.c1sq, f.c2, f.chi}; }

}  // namespace

BaseChangeInvariants stabilizing_invariants(const FibrationLedger& ledger,
                                            const BaseChangeSpec& spec) {
  ledger.validate();
  if (spec.d < 1) throw std::domain_error("base change: degree must be >= 1");

  std::set<int> seen;
  Int rh = spec.d * (2 * ledger.b - 2);
  Triple cB{Rational(0), Rational(0), Rational(0)};
  Triple cR{Rational(0), Rational(0), Rational(0)};
  bool stabilizing = true;

  for (const auto& pt : spec.branch) {
    Int total = 0;
    for (const auto& e : pt.profile) {
      if (e < 1) throw std::domain_error("base change: ramification index must be >= 1");
      total += e;
    }
    if (total != spec.d)
      throw std::domain_error("base change: profile does not sum to the degree");
    rh += spec.d - Int(pt.profile.size());

    if (pt.fiber < 0) continue;  // smooth fiber: no contribution
    if (pt.fiber >= static_cast<int>(ledger.fibers.size()))
      throw std::domain_error("base change: branch over unknown fiber index " +
                              std::to_string(pt.fiber));
    if (!seen.insert(pt.fiber).second)
      throw std::domain_error("base change: fiber listed over two branch points");
    const FiberSummary& F = ledger.fibers[pt.fiber];
    if (F.semistable) continue;
    cB += of(F);

    for (size_t pi = 0; pi < pt.profile.size(); ++pi) {
      const Int& e = pt.profile[pi];
      if (e == 1) {
        cR += of(F);  // unramified preimage: a copy of F
        stabilizing = false;
        continue;
      }
      if (F.M && e % *F.M == 0) continue;  // stabilized: semistable pullback
      if (pi < pt.pullback.size() && pt.pullback[pi]) {
        const FiberSummary& P = *pt.pullback[pi];
        cR += of(P);
        if (!P.semistable) stabilizing = false;
        continue;
      }
      throw std::domain_error(
          "base change: requires pullback fiber data for ramification index " + str(e) +
          " over fiber '" + F.name + "'");
    }
  }

  if (rh % 2 != 0 || rh < -2)
    throw std::domain_error("base change: Riemann-Hurwitz gives invalid cover genus");

  BaseChangeInvariants out;
  out.K2 = cB.K2 - cR.K2 / Rational(spec.d);
  out.e = cB.e - cR.e / Rational(spec.d);
  out.chi = cB.chi - cR.chi / Rational(spec.d);
  out.stabilizing = stabilizing;
  out.cover_genus = (rh + 2) / 2;
  if (out.chi.sign() > 0) out.lambda = out.K2 / out.chi;
  return out;
}

BaseChangeInvariants compose(const BaseChangeInvariants& outer, const Int& outer_degree,
                             const BaseChangeInvariants& inner) {
  if (outer_degree < 1) throw std::domain_error("compose: degree must be >= 1");
  BaseChangeInvariants out;
  out.K2 = outer.K2 + inner.K2 / Rational(outer_degree);
  out.e = outer.e + inner.e / Rational(outer_degree);
  out.chi = outer.chi + inner.chi / Rational(outer_degree);
  out.stabilizing = outer.stabilizing && inner.stabilizing;
  if (out.chi.sign() > 0) out.lambda = out.K2 / out.chi;
  return out;
}

IsotrivialityInvariants isotriviality_invariants(const FibrationLedger& ledger) {
  ledger.validate();
  IsotrivialityInvariants iso;
  iso.I_K = ledger.K2_f;
  iso.I_chi = ledger.chi_f;
  iso.I_e = ledger.e_f;
  for (const auto& f : ledger.fibers) {
    iso.I_K -= f.c1sq;
    iso.I_chi -= f.chi;
    iso.I_e -= f.c2;
  }
  if (iso.I_K.sign() < 0 || iso.I_chi.sign() < 0 || iso.I_e.sign() < 0)
    throw std::domain_error(
        "inconsistent ledger: an isotriviality invariant is negative (sum of fiber "
        "invariants exceeds the relative invariants)");
  iso.isotrivial = iso.I_K.is_zero() || iso.I_chi.is_zero();
  return iso;
}

Rational semistable_slope(const FibrationLedger& ledger) {
  IsotrivialityInvariants iso = isotriviality_invariants(ledger);
  if (iso.I_chi.is_zero())
    throw std::domain_error("semistable_slope: fibration is isotrivial (I_chi = 0)");
  return iso.I_K / iso.I_chi;
}

Rational horikawa_shift(const Rational& H_F, const FiberSummary& fi, const Int& d) {
  return Rational(d) * (H_F + (fi.c2 - Rational(3) * fi.c1sq) / Rational(4));
}

bool reid_sum_check(const FibrationLedger& ledger, const std::vector<Rational>& H_values,
                    Rational* defect) {
  Rational sum(0);
  for (const auto& h : H_values) sum += h;
  Rational lhs = ledger.K2_f - Rational(3) * ledger.chi_f;
  if (defect) *defect = lhs - sum;
  return lhs == sum;
}

FibrationLedger pullback_ledger(const FibrationLedger& ledger, const BaseChangeSpec& spec) {
  BaseChangeInvariants bi = stabilizing_invariants(ledger, spec);
  FibrationLedger out;
  out.name = ledger.name + " x" + str(spec.d);
  out.g = ledger.g;
  out.b = *bi.cover_genus;
  out.K2_f = Rational(spec.d) * (ledger.K2_f - bi.K2);
  out.chi_f = Rational(spec.d) * (ledger.chi_f - bi.chi);
  out.e_f = Rational(spec.d) * (ledger.e_f - bi.e);
  out.hyperelliptic = ledger.hyperelliptic;

  Int s_out = 0;
  bool all_ss = true;
  for (size_t fi = 0; fi < ledger.fibers.size(); ++fi) {
    const FiberSummary& F = ledger.fibers[fi];
    const RamificationPoint* pt = nullptr;
    for (const auto& p : spec.branch)
      if (p.fiber == static_cast<int>(fi)) pt = &p;
    if (!pt) {
      // unbranched: d preimage points, each a copy of F
      for (Int k = 0; k < spec.d; ++k) out.fibers.push_back(F);
      s_out += spec.d;
      all_ss &= F.semistable;
      continue;
    }
    for (size_t pi = 0; pi < pt->profile.size(); ++pi) {
      const Int& e = pt->profile[pi];
      if (F.semistable || (F.M && e % *F.M == 0)) {
        // semistable pullback; singular unless the model is smooth
        bool smooth = F.e && F.c2 == Rational(*F.e);
        if (!F.semistable && !smooth) s_out += 1;
        if (F.semistable) s_out += 1;  // stays singular semistable
        continue;
      }
      if (e == 1) {
        out.fibers.push_back(F);
        s_out += 1;
        all_ss = false;
        continue;
      }
      if (pi < pt->pullback.size() && pt->pullback[pi]) {
        const FiberSummary& P = *pt->pullback[pi];
        if (!P.semistable) {
          out.fibers.push_back(P);
          all_ss = false;
        }
        s_out += 1;
        continue;
      }
      throw std::domain_error("pullback_ledger: missing pullback data over fiber '" +
                              F.name + "'");
    }
  }
  // singular fibers the ledger does not list individually (semistable ones)
  Int unlisted = Int(ledger.s) - Int(ledger.fibers.size());
  s_out += unlisted * spec.d;
  out.s = s_out;
  out.semistable = all_ss;
  out.validate();
  return out;
}

}  // namespace pencil
