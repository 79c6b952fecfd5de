#include "corpus.hpp"
#include "doctest.h"
#include "pencil/certify.hpp"
#include "pencil/io.hpp"

using namespace pencil;

namespace {

const char* kCuspJson = R"({
  "version": 1,
  "name": "cusp_g3",
  "components": [{"id": "C", "multiplicity": 1, "geometric_genus": 2}],
  "singular_points": [
    {"kind": "germ", "local_equation": "x^2+y^3", "branch_map": {"0": "C"}}
  ],
  "declared_genus": 3
})";

const char* kLedgerJson = R"({
  "version": 1,
  "name": "synthetic",
  "genus": 3,
  "base_genus": 0,
  "chi_f": "2",
  "K2_f": "10",
  "e_f": "14",
  "singular_fiber_count": 3,
  "fibers": [
    {"name": "cusp", "c1sq": "1/6", "c2": "11/6", "chi": "1/6", "M": 6, "e_F": 2}
  ]
})";

const char* kSpecJson = R"({
  "version": 1,
  "degree": 6,
  "branch": [
    {"fiber": 0, "profile": [6]},
    {"fiber": "smooth", "profile": [6]}
  ]
})";

}  // namespace

TEST_CASE("fiber file parsing") {
  FiberConfig cfg = io::parse_fiber_json(kCuspJson, "fallback");
  CHECK(cfg.name == "cusp_g3");
  REQUIRE(cfg.components.size() == 1);
  CHECK(cfg.components[0].mult == 1);
  CHECK(cfg.components[0].genus == 2);
  REQUIRE(cfg.germs.size() == 1);
  CHECK(cfg.germs[0].branch_map.at(0) == "C");
  CHECK(*cfg.declared_genus == 3);
  FiberInvariants fi = fiber_invariants(cfg);
  CHECK(fi.c1sq == Rational(1, 6));
}

TEST_CASE("fiber file schema errors") {
  CHECK_THROWS_AS((void)io::parse_fiber_json("{", "x"), std::domain_error);
  CHECK_THROWS_AS((void)io::parse_fiber_json("{}", "x"), std::domain_error);
  CHECK_THROWS_WITH_AS(
      (void)io::parse_fiber_json(
          R"({"components":[{"id":"A"}],
              "singular_points":[{"kind":"node","components":["A","A"],
                                  "intersection":2}]})",
          "x"),
      doctest::Contains("tangency"), std::domain_error);
}

TEST_CASE("ledger and spec files round through the engines") {
  FibrationLedger led = io::parse_ledger_json(kLedgerJson);
  CHECK(led.g == 3);
  CHECK(led.fibers.size() == 1);
  CHECK(led.fibers[0].c1sq == Rational(1, 6));
  BaseChangeSpec spec = io::parse_spec_json(kSpecJson);
  CHECK(spec.d == 6);
  REQUIRE(spec.branch.size() == 2);
  CHECK(spec.branch[0].fiber == 0);
  CHECK(spec.branch[1].fiber == -1);
  BaseChangeInvariants bi = stabilizing_invariants(led, spec);
  CHECK(bi.K2 == Rational(1, 6));
}

TEST_CASE("structured reports are byte-identical across runs") {
  FiberConfig cfg1 = io::parse_fiber_json(kCuspJson, "a");
  FiberConfig cfg2 = io::parse_fiber_json(kCuspJson, "b");
  FiberInvariants f1 = fiber_invariants(cfg1), f2 = fiber_invariants(cfg2);
  std::string r1 = io::fiber_report_json(cfg1, f1, fiber_checks(f1));
  std::string r2 = io::fiber_report_json(cfg2, f2, fiber_checks(f2));
  CHECK(r1 == r2);
  CHECK(r1.find("\"version\": 1") != std::string::npos);
  CHECK(r1.find("\"c1sq\": \"1/6\"") != std::string::npos);
  CHECK(r1.find("\"c2\": \"11/6\"") != std::string::npos);
}

TEST_CASE("rationals serialize as p/q strings") {
  FibrationLedger led = io::parse_ledger_json(kLedgerJson);
  IsotrivialityInvariants iso = isotriviality_invariants(led);
  CheckReport checks = slope_checks(led);
  std::string rep = io::ledger_report_json(led, iso, checks);
  CHECK(rep.find("\"I_K\": \"59/6\"") != std::string::npos);
  CHECK(rep.find("\"I_chi\": \"11/6\"") != std::string::npos);
  CHECK(rep.find("\"semistable_slope\": \"59/11\"") != std::string::npos);
}
