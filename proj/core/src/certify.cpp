#include "pencil/certify.hpp"

#include <sstream>

namespace pencil {

bool CheckReport::any_fail() const {
  for (const auto& it : items)
    if (it.status == CheckStatus::fail) return true;
  return false;
}

void CheckReport::append(const CheckReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

std::string CheckReport::render() const {
  std::ostringstream os;
  for (const auto& it : items) {
    const char* tag = it.status == CheckStatus::pass
                          ? (it.conditional ? "PASS*" : "PASS ")
                          : it.status == CheckStatus::equality ? "EQ   " : "FAIL ";
    os << tag << " " << it.id << ": " << it.lhs.str() << " vs " << it.rhs.str();
    if (!it.note.empty()) os << "  [" << it.note << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

CheckItem compare_le(const std::string& id, const Rational& lhs, const Rational& rhs,
                     const std::string& eq_note = "") {
  CheckItem it{id, CheckStatus::pass, lhs, rhs, "", false};
  if (lhs > rhs) {
    it.status = CheckStatus::fail;
  } else if (lhs == rhs) {
    it.status = CheckStatus::equality;
    it.note = eq_note;
  }
  return it;
}

}  // namespace

CheckReport fiber_checks(const FiberInvariants& fi) {
  CheckReport rep;
  if (fi.semistable) {
    // all invariants vanish; report a single aggregate pass
    rep.items.push_back({"fiber:semistable-vanishing", CheckStatus::pass, fi.c1sq,
                         Rational(0), "semistable fiber, zero invariants", false});
    return rep;
  }

  {
    CheckItem it = compare_le("extremal:c1^2<=2c2", fi.c1sq, Rational(2) * fi.c2);
    if (it.status == CheckStatus::equality) {
      if (fi.n_fred_with_nodes_only) {
        it.note = "equality case confirmed: F = nF_red with at worst nodes";
      } else {
        it.status = CheckStatus::fail;
        it.note = "equality attained but F is not nF_red with only nodes";
      }
    } else if (it.status == CheckStatus::pass && fi.n_fred_with_nodes_only) {
      it.status = CheckStatus::fail;
      it.note = "F = nF_red with only nodes must attain equality";
    }
    rep.items.push_back(it);
  }

  rep.items.push_back(compare_le("genus-bound:c1^2<=4g-4", fi.c1sq, Rational(4 * fi.g - 4)));
  rep.items.push_back(compare_le("c2<=e_F", fi.c2, Rational(fi.e),
                                 "semistable model of F is smooth"));
  {
    CheckItem it = compare_le("alpha-bound:sum_alpha<=2pa(F_red)", fi.alpha_sum,
                              Rational(2 * fi.pa_red));
    if (it.status == CheckStatus::equality && fi.pa_red != 0) {
      it.status = CheckStatus::fail;
      it.note = "equality attained but p_a(F_red) != 0";
    }
    rep.items.push_back(it);
  }
  if (fi.mult_comps_all_minus_two)
    rep.items.push_back(compare_le("minus-two-multiples:c1^2<=c2", fi.c1sq, fi.c2));
  {
    CheckItem it{"noether:12chi=c1^2+c2", CheckStatus::pass, Rational(12) * fi.chi,
                 fi.c1sq + fi.c2, "", false};
    if (it.lhs != it.rhs) it.status = CheckStatus::fail;
    rep.items.push_back(it);
  }
  return rep;
}

CheckReport slope_checks(const FibrationLedger& ledger) {
  ledger.validate();
  CheckReport rep;

  bool any_non_ss = false;
  for (const auto& f : ledger.fibers) {
    if (f.semistable) continue;
    any_non_ss = true;
    Rational lam = f.c1sq / f.chi;
    CheckItem it{"fiber-slope:0<lambda_F<=8 (" + f.name + ")", CheckStatus::pass, lam,
                 Rational(8), "", false};
    if (lam.sign() <= 0 || lam > Rational(8))
      it.status = CheckStatus::fail;
    else if (lam == Rational(8))
      it.status = CheckStatus::equality;
    rep.items.push_back(it);
  }

  if (ledger.chi_f.sign() <= 0) {
    rep.items.push_back({"slope:lambda_f", CheckStatus::pass, ledger.chi_f, Rational(0),
                         "chi_f = 0: slope undefined (locally trivial)", true});
    return rep;
  }
  Rational lam_f = ledger.K2_f / ledger.chi_f;

  rep.items.push_back(compare_le("xiao:lambda_f>=4-4/g",
                                 Rational(4) - Rational(4) / Rational(ledger.g), lam_f));

  {
    CheckItem it{"slope>8=>semistable", CheckStatus::pass, lam_f,
                 Rational(8), "", false};
    if (lam_f > Rational(8) && any_non_ss) {
      it.status = CheckStatus::fail;
      it.note = "lambda_f > 8 with a non-semistable fiber";
    } else if (lam_f <= Rational(8)) {
      it.note = "vacuous (lambda_f <= 8)";
    }
    rep.items.push_back(it);
  }

  if (lam_f > Rational(6)) {
    for (const auto& f : ledger.fibers) {
      if (f.semistable) continue;
      CheckItem it{"slope>6=>non-(-2)-multiple (" + f.name + ")",
                   CheckStatus::pass, lam_f, Rational(6), "", false};
      if (!f.mult_comps_minus_two.has_value()) {
        it.conditional = true;
        it.note = "component geometry unknown; hypothesis unverified";
      } else if (*f.mult_comps_minus_two) {
        it.status = CheckStatus::fail;
        it.note = "all multiple components are (-2)-curves despite lambda_f > 6";
      }
      rep.items.push_back(it);
    }
  }

  if (lam_f > Rational(8) && !any_non_ss) {
    // Corollary on stabilizing base changes: the semistable-model slope
    // exceeds lambda_f for non-semistable f; for semistable ledgers the
    // model slope equals lambda_f.
    rep.items.push_back({"model-slope:lambda_tilde>lambda_f", CheckStatus::pass, lam_f,
                         lam_f, "ledger already semistable", false});
  } else if (lam_f > Rational(8)) {
    try {
      Rational lam_t = semistable_slope(ledger);
      CheckItem it{"model-slope:lambda_tilde>lambda_f", CheckStatus::pass, lam_t, lam_f,
                   "", false};
      if (lam_t <= lam_f) it.status = CheckStatus::fail;
      rep.items.push_back(it);
    } catch (const std::domain_error&) {
      rep.items.push_back({"model-slope:lambda_tilde>lambda_f", CheckStatus::pass,
                           Rational(0), lam_f, "isotrivial: no semistable slope", true});
    }
  }

  if (ledger.hyperelliptic) {
    Int gsq_half = (ledger.g * ledger.g) / 2;
    Rational bound = Rational(12) - Rational(4 * ledger.g + 2) / Rational(gsq_half);
    rep.items.push_back(compare_le("xiao-hyperelliptic:lambda_f<=12-(4g+2)/[g^2/2]",
                                   lam_f, bound));
  }
  return rep;
}

CheckReport canonical_class_checks(const FibrationLedger& ledger) {
  ledger.validate();
  CheckReport rep;
  const Rational twog2 = Rational(2 * ledger.g - 2);
  const Rational base = Rational(2 * ledger.b - 2);

  {
    Rational rhs = twog2 * (base + Rational(3) * Rational(ledger.s));
    CheckItem it = compare_le("canonical-class:K^2<=(2g-2)(2b-2+3s)", ledger.K2_f, rhs);
    it.conditional = true;
    it.note = it.note.empty() ? "assumes f non-trivial" : it.note;
    if (it.status == CheckStatus::equality) {
      if (ledger.s != 0) {
        it.status = CheckStatus::fail;
        it.note = "equality requires a smooth fibration (s = 0)";
      } else {
        it.note = "equality: consistent with smoothness";
      }
    }
    rep.items.push_back(it);
  }

  if (ledger.semistable) {
    Rational n = base + Rational(ledger.s);
    rep.items.push_back(compare_le("vojta:K^2<=(2g-2)(2b-2+s)", ledger.K2_f, twog2 * n,
                                   "equality implies smoothness"));
    {
      Rational rhs = Rational(4 * ledger.g * (ledger.g - 1)) * n;
      CheckItem it{"szpiro:K^2<4g(g-1)(2b-2+s)", CheckStatus::pass, ledger.K2_f, rhs,
                   "", false};
      if (ledger.K2_f >= rhs) it.status = CheckStatus::fail;
      rep.items.push_back(it);
    }
    rep.items.push_back(compare_le("ev:K^2<=8(g-1)^2(2b-2+s)", ledger.K2_f,
                                   Rational(8 * (ledger.g - 1) * (ledger.g - 1)) * n));
  }
  return rep;
}

Rational miyaoka_m(const std::string& ade) {
  if (ade.size() < 2) throw std::domain_error("miyaoka_m: bad ADE tag '" + ade + "'");
  char family = ade[0];
  Int r;
  try {
    r = Int(ade.substr(1));
  } catch (...) {
    throw std::domain_error("miyaoka_m: bad ADE tag '" + ade + "'");
  }
  if (family == 'A' && r >= 1)
    return Rational(3 * (r + 1)) - Rational(3, r + 1);
  if (family == 'D' && r >= 4)
    return Rational(3 * (r + 1)) - Rational(3, 4 * (r - 2));
  if (family == 'E' && r == 6) return Rational(21) - Rational(1, 8);
  if (family == 'E' && r == 7) return Rational(24) - Rational(1, 16);
  if (family == 'E' && r == 8) return Rational(27) - Rational(1, 40);
  throw std::domain_error("miyaoka_m: bad ADE tag '" + ade + "'");
}

DeltaSharp delta_sharp(const Rational& e_F, const std::vector<std::string>& ades,
                       const Int& g) {
  Rational sum(0);
  for (const auto& tag : ades) sum += miyaoka_m(tag);
  Rational value = e_F - sum / Rational(3);
  return {value, value <= Rational(4 * g - 3)};
}

CheckReport miyaoka_fiber_bound(
    const FibrationLedger& ledger,
    const std::vector<std::pair<Rational, std::vector<std::string>>>& fiber_data) {
  CheckReport rep;
  Rational sum(0);
  for (const auto& [eF, ades] : fiber_data) {
    DeltaSharp ds = delta_sharp(eF, ades, ledger.g);
    sum += ds.value;
    CheckItem it{"delta-sharp:<=4g-3", ds.bound_ok ? CheckStatus::pass : CheckStatus::fail,
                 ds.value, Rational(4 * ledger.g - 3),
                 "assumes disjoint ADE curves; general-type hypothesis unverified", true};
    rep.items.push_back(it);
  }
  Rational tail = Rational(2 * ledger.g - 2);
  Rational base = Rational(2 * ledger.b - 2);
  if (base.sign() < 0) base = Rational(0);
  CheckItem it = compare_le("miyaoka:K^2<=3*sum delta#+(2g-2)max(2b-2,0)", ledger.K2_f,
                            Rational(3) * sum + tail * base);
  it.conditional = true;
  if (it.note.empty()) it.note = "general-type hypothesis unverified";
  rep.items.push_back(it);
  return rep;
}

}  // namespace pencil
