#include "corpus.hpp"
#include "doctest.h"
#include "pencil/certify.hpp"

using namespace pencil;

namespace {

FibrationLedger ledger_with(const Rational& K2, const Rational& chi, Int g, Int b,
                            Int s, std::vector<FiberSummary> fibers = {}) {
  FibrationLedger led;
  led.name = "test";
  led.g = g;
  led.b = b;
  led.K2_f = K2;
  led.chi_f = chi;
  led.e_f = Rational(12) * chi - K2;
  led.s = s;
  led.fibers = std::move(fibers);
  return led;
}

}  // namespace

TEST_CASE("fiber checks on the two worked examples") {
  FiberInvariants cusp = fiber_invariants(corpus::cusp_fiber());
  CheckReport rep = fiber_checks(cusp);
  CHECK(!rep.any_fail());
  bool saw_genus_bound = false;
  for (const auto& it : rep.items) {
    if (it.id.rfind("genus-bound", 0) == 0) {
      saw_genus_bound = true;
      CHECK(it.status == CheckStatus::pass);  // 1/6 < 8 strictly
    }
  }
  CHECK(saw_genus_bound);

  FiberInvariants twoc = fiber_invariants(corpus::double_smooth_fiber());
  rep = fiber_checks(twoc);
  CHECK(!rep.any_fail());
  bool saw_eq = false;
  for (const auto& it : rep.items)
    if (it.id.rfind("extremal", 0) == 0) {
      CHECK(it.status == CheckStatus::equality);
      CHECK(it.note.find("confirmed") != std::string::npos);
      saw_eq = true;
    }
  CHECK(saw_eq);
}

TEST_CASE("fiber checks never fail across the corpus (self-test harness)") {
  for (const auto& cfg : corpus::all()) {
    CAPTURE(cfg.name);
    FiberInvariants fi = fiber_invariants(cfg);
    CheckReport rep = fiber_checks(fi);
    CHECK(!rep.any_fail());
  }
}

TEST_CASE("slope checks") {
  // lambda_f = 9 with a non-semistable fiber: direct contradiction
  FiberSummary cusp = FiberSummary::from(fiber_invariants(corpus::cusp_fiber()), "cusp");
  FibrationLedger led = ledger_with(Rational(18), Rational(2), 3, 0, 1, {cusp});
  CheckReport rep = slope_checks(led);
  bool found = false;
  for (const auto& it : rep.items)
    if (it.id.rfind("slope>8", 0) == 0) {
      CHECK(it.status == CheckStatus::fail);
      found = true;
    }
  CHECK(found);

  // cuspidal fiber: lambda_F = 1 passes; F = 2C: lambda_F = 8 equality
  FiberSummary twoc = FiberSummary::from(fiber_invariants(corpus::double_smooth_fiber()),
                                         "2C");
  led = ledger_with(Rational(10), Rational(2), 3, 0, 2, {cusp, twoc});
  rep = slope_checks(led);
  CHECK(!rep.any_fail());
  int statuses = 0;
  for (const auto& it : rep.items) {
    if (it.id.find("cusp") != std::string::npos) {
      CHECK(it.status == CheckStatus::pass);
      ++statuses;
    }
    if (it.id.find("2C") != std::string::npos && it.id.rfind("fiber-slope", 0) == 0) {
      CHECK(it.status == CheckStatus::equality);
      ++statuses;
    }
  }
  CHECK(statuses == 2);

  // Xiao lower bound fails on synthetic nonsense
  FibrationLedger low = ledger_with(Rational(1), Rational(2), 3, 0, 1, {cusp});
  rep = slope_checks(low);
  bool xiao_fail = false;
  for (const auto& it : rep.items)
    if (it.id.rfind("xiao", 0) == 0 && it.status == CheckStatus::fail) xiao_fail = true;
  CHECK(xiao_fail);

  // hyperelliptic upper bound evaluated only when tagged
  FibrationLedger hyp = ledger_with(Rational(8), Rational(1), 2, 1, 0);
  hyp.hyperelliptic = true;
  rep = slope_checks(hyp);
  bool saw_hyp = false;
  for (const auto& it : rep.items)
    if (it.id.find("hyperelliptic") != std::string::npos) saw_hyp = true;
  CHECK(saw_hyp);
  // lambda = 8 > 12 - 10/2 = 7: must fail
  CHECK(rep.any_fail());
}

TEST_CASE("corollary 4.4.3: multiple non-(-2) component needed above slope 6") {
  FiberSummary twoc = FiberSummary::from(fiber_invariants(corpus::double_smooth_fiber()),
                                         "2C");
  // 2C has a multiple component of genus 2 (not a (-2)-curve): consistent
  FibrationLedger led = ledger_with(Rational(13), Rational(2), 3, 0, 1, {twoc});
  CheckReport rep = slope_checks(led);
  for (const auto& it : rep.items)
    if (it.id.rfind("slope>6", 0) == 0) CHECK(it.status == CheckStatus::pass);

  // a fabricated fiber claiming all multiple components are (-2)-curves
  FiberSummary fake = twoc;
  fake.name = "fake";
  fake.mult_comps_minus_two = true;
  FibrationLedger led2 = ledger_with(Rational(13), Rational(2), 3, 0, 1, {fake});
  rep = slope_checks(led2);
  bool failed = false;
  for (const auto& it : rep.items)
    if (it.id.rfind("slope>6", 0) == 0 && it.status == CheckStatus::fail) failed = true;
  CHECK(failed);
}

TEST_CASE("canonical class checks") {
  // smooth ledger attaining equality
  FibrationLedger smooth = ledger_with(Rational(2) * Rational(2 * 2 - 2), Rational(1),
                                       2, 2, 0);
  smooth.e_f = Rational(12) * smooth.chi_f - smooth.K2_f;
  CheckReport rep = canonical_class_checks(smooth);
  bool eq = false;
  for (const auto& it : rep.items)
    if (it.id.rfind("canonical-class", 0) == 0) eq = it.status == CheckStatus::equality;
  CHECK(eq);
  CHECK(!rep.any_fail());

  // g = 2, b = 1, s = 3, K^2 = 20 > (2g-2)(2b-2+3s) = 18: fail
  FibrationLedger bad = ledger_with(Rational(20), Rational(2), 2, 1, 3);
  rep = canonical_class_checks(bad);
  CHECK(rep.any_fail());

  // semistable ledger violating the Vojta bound (but not Szpiro / EV)
  FibrationLedger voj = ledger_with(Rational(5), Rational(1), 2, 0, 3);
  voj.semistable = true;
  rep = canonical_class_checks(voj);
  bool vojta_fail = false;
  for (const auto& it : rep.items)
    if (it.id.rfind("vojta", 0) == 0 && it.status == CheckStatus::fail) vojta_fail = true;
  CHECK(vojta_fail);
  // Szpiro and EV hold for these numbers
  for (const auto& it : rep.items) {
    if (it.id.rfind("szpiro", 0) == 0) CHECK(it.status == CheckStatus::pass);
    if (it.id.rfind("ev", 0) == 0) CHECK(it.status == CheckStatus::pass);
  }
}

TEST_CASE("miyaoka m(E) values") {
  CHECK(miyaoka_m("A1") == Rational(9, 2));
  CHECK(miyaoka_m("A2") == Rational(8));
  CHECK(miyaoka_m("D4") == Rational(15) - Rational(3, 8));
  CHECK(miyaoka_m("E6") == Rational(21) - Rational(1, 8));
  CHECK(miyaoka_m("E7") == Rational(24) - Rational(1, 16));
  CHECK(miyaoka_m("E8") == Rational(27) - Rational(1, 40));
  CHECK_THROWS_AS(miyaoka_m("D3"), std::domain_error);
  CHECK_THROWS_AS(miyaoka_m("E9"), std::domain_error);
  CHECK_THROWS_AS(miyaoka_m("Z1"), std::domain_error);
}

TEST_CASE("delta sharp") {
  DeltaSharp ds = delta_sharp(Rational(6), {}, 2);
  CHECK(ds.value == Rational(6));
  CHECK(!ds.bound_ok);  // 6 > 4*2-3 = 5

  ds = delta_sharp(Rational(6), {"A1"}, 2);
  CHECK(ds.value == Rational(6) - Rational(3, 2));
  CHECK(ds.bound_ok);

  ds = delta_sharp(Rational(4 * 2 - 2), {}, 2);
  CHECK(!ds.bound_ok);
}

TEST_CASE("miyaoka fiber bound report") {
  FibrationLedger led = ledger_with(Rational(4), Rational(1), 2, 0, 2);
  CheckReport rep = miyaoka_fiber_bound(
      led, {{Rational(3), {"A1"}}, {Rational(2), {}}});
  // K^2 = 4 <= 3*((3 - 3/2) + 2) + 0 = 10.5
  CHECK(!rep.any_fail());
  for (const auto& it : rep.items) CHECK(it.conditional);
}
