// Shared deterministic corpus of valid fiber configurations, used by the
// property suites and the acceptance criteria. Germs have degree <= 6 and
// every configuration passes validation with fiber genus >= 2 (plus a few
// semistable and multiple-fiber vanishing cases).
#pragma once

#include <random>
#include <string>
#include <vector>

#include "pencil/fiber.hpp"

namespace pencil::corpus {

inline GermPoint germ_on(const std::string& expr, const std::string& comp) {
  GermPoint gp;
  gp.equation = expr;
  gp.germ = parse_germ(expr);
  for (size_t i = 0; i < gp.germ.factors.size(); ++i)
    gp.branch_map[static_cast<int>(i)] = comp;
  return gp;
}

// Single reduced component of the given genus carrying one germ whose
// factors all have multiplicity 1.
inline FiberConfig single(const std::string& name, const std::string& expr, Int genus) {
  FiberConfig cfg;
  cfg.name = name;
  cfg.components.push_back({"C", 1, genus});
  if (!expr.empty()) cfg.germs.push_back(germ_on(expr, "C"));
  return cfg;
}

// Multiple fiber nC, C smooth of the given genus.
inline FiberConfig multiple(const std::string& name, Int n, Int genus) {
  FiberConfig cfg;
  cfg.name = name;
  cfg.components.push_back({"C", n, genus});
  return cfg;
}

// Star: central rational component of multiplicity m with `sats` reduced
// satellites of genus sat_genus, one node each.
inline FiberConfig star(const std::string& name, Int m, int sats, Int sat_genus) {
  FiberConfig cfg;
  cfg.name = name;
  cfg.components.push_back({"E", m, 0});
  for (int i = 0; i < sats; ++i) {
    std::string id = "A" + std::to_string(i);
    cfg.components.push_back({id, 1, sat_genus});
    cfg.nodes.push_back({"E", id});
  }
  return cfg;
}

// The two worked examples: a geometric-genus-2 curve with one ordinary cusp
// (fiber genus 3), and F = 2C with C smooth of genus 2.
inline FiberConfig cusp_fiber() {
  FiberConfig cfg = single("cusp_g3", "x^2+y^3", 2);
  cfg.declared_genus = 3;
  return cfg;
}

inline FiberConfig double_smooth_fiber() {
  FiberConfig cfg = multiple("two_c", 2, 2);
  cfg.declared_genus = 3;
  return cfg;
}

// Two components meeting in nodes; multiplicities (1, 1).
inline FiberConfig chain2(const std::string& name, Int g1, Int g2, int nodes) {
  FiberConfig cfg;
  cfg.name = name;
  cfg.components.push_back({"A", 1, g1});
  cfg.components.push_back({"B", 1, g2});
  for (int i = 0; i < nodes; ++i) cfg.nodes.push_back({"A", "B"});
  return cfg;
}

// F = 2C + A with C of genus cg, A rational, meeting twice (A^2 = -4).
inline FiberConfig double_plus_section(const std::string& name, Int cg) {
  FiberConfig cfg;
  cfg.name = name;
  cfg.components.push_back({"C", 2, cg});
  cfg.components.push_back({"A", 1, 0});
  cfg.nodes.push_back({"C", "A"});
  cfg.nodes.push_back({"C", "A"});
  return cfg;
}

inline std::vector<FiberConfig> all() {
  std::vector<FiberConfig> out;
  out.push_back(cusp_fiber());
  out.push_back(double_smooth_fiber());

  // semistable representatives
  out.push_back(chain2("stable_node", 0, 2, 1));
  out.push_back(chain2("stable_binodal", 1, 1, 2));
  out.push_back(single("smooth_g2", "", 2));
  out.push_back(single("irred_node", "x*y", 2));
  {
    FiberConfig cfg = single("irred_conj_node", "x^2-2*y^2", 1);
    out.push_back(cfg);
  }

  // one-component fibers with assorted germs (degree <= 6)
  const std::vector<std::string> exprs = {
      "x^2+y^3",       "x^2+y^5",     "x^2+y^7",        "x*(x+y^2)",
      "x*(x+y^3)",     "x*(x+y^4)",   "x*y*(x+y)",      "x*y*(x+y)*(x+2*y)",
      "x^3+y^4",       "x^3+y^5",     "y*(x^2+y^3)",    "(x^2+y^3)*(x^2-y^3)",
      "(x+y^2)*(x-y^2)", "x^3+y^7",   "y*(y-x^2)*(y+x^2)", "x*(x+y^2)*(x+y^3)",
      "y*(y^2-2*x^2)",   "y*(y^2-3*x^4)"};
  int idx = 0;
  for (const auto& e : exprs)
    for (Int genus : {Int(2), Int(3)})
      out.push_back(single("g" + str(genus) + "_" + std::to_string(idx++), e, genus));

  // multiple smooth fibers nC
  for (Int n = 2; n <= 4; ++n)
    for (Int genus : {Int(2), Int(3)})
      out.push_back(multiple("mult_" + str(n) + "_" + str(genus), n, genus));

  // stars (I_0^*-like shapes pushed to genus >= 2)
  out.push_back(star("star_2x4_g1", 2, 4, 1));
  out.push_back(star("star_2x8_g0", 2, 8, 0));
  out.push_back(star("star_2x6_g0", 2, 6, 0));
  out.push_back(star("star_3x6_g0", 3, 6, 0));
  out.push_back(double_plus_section("two_c_plus_a", 1));
  out.push_back(double_plus_section("two_c2_plus_a", 2));

  // a multiple rational component with a germ on a reduced satellite
  out.push_back([] {
    FiberConfig cfg = star("star_with_cusp", 2, 6, 0);
    cfg.germs.push_back(germ_on("x^2+y^3", "A0"));
    return cfg;
  }());

  // two singular points on one component: a cusp and a self-node
  out.push_back([] {
    FiberConfig cfg = single("cusp_and_node", "x^2+y^3", 2);
    cfg.germs.push_back(germ_on("x*y", "C"));
    return cfg;
  }());

  // two components through one germ: transversal and tangential contact
  out.push_back([] {
    FiberConfig cfg;
    cfg.name = "banana_tacnode";
    cfg.components.push_back({"A", 1, 1});
    cfg.components.push_back({"B", 1, 1});
    GermPoint gp;
    gp.equation = "x*(x+y^2)";
    gp.germ = parse_germ(gp.equation);
    gp.branch_map[0] = "A";
    gp.branch_map[1] = "B";
    cfg.germs.push_back(std::move(gp));
    cfg.nodes.push_back({"A", "B"});
    return cfg;
  }());
  out.push_back([] {
    FiberConfig cfg;
    cfg.name = "cuspidal_pair";
    cfg.components.push_back({"A", 1, 0});
    cfg.components.push_back({"B", 1, 2});
    GermPoint gp;
    gp.equation = "(x^2+y^3)*y";
    gp.germ = parse_germ(gp.equation);
    // factor order is canonical: y (degree 1) before x^2+y^3
    gp.branch_map[0] = "A";
    gp.branch_map[1] = "B";
    cfg.germs.push_back(std::move(gp));
    return cfg;
  }());

  // seeded random singles drawn from the germ list (degree <= 6)
  std::mt19937 rng(9128);
  for (int i = 0; i < 12; ++i) {
    const std::string& e = exprs[rng() % exprs.size()];
    Int genus = Int(2 + static_cast<long>(rng() % 2));
    out.push_back(single("rnd_" + std::to_string(i), e, genus));
  }
  return out;
}

}  // namespace pencil::corpus
