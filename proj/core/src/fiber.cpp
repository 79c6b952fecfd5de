#include "pencil/fiber.hpp"

#include <algorithm>
#include <set>

#include "pencil/cover.hpp"

namespace pencil {

int FiberConfig::component_index(const std::string& id) const {
  for (size_t i = 0; i < components.size(); ++i)
    if (components[i].id == id) return static_cast<int>(i);
  return -1;
}

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw std::domain_error("fiber: " + msg);
}

void validate_config(const FiberConfig& cfg) {
  if (cfg.components.empty()) invalid("no components");
  std::set<std::string> ids;
  for (const auto& c : cfg.components) {
    if (c.id.empty()) invalid("component with empty id");
    if (!ids.insert(c.id).second) invalid("duplicate component id '" + c.id + "'");
    if (c.mult < 1) invalid("component '" + c.id + "' has non-positive multiplicity");
    if (c.genus < 0) invalid("component '" + c.id + "' has negative genus");
  }
  for (const auto& n : cfg.nodes) {
    if (cfg.component_index(n.c1) < 0 || cfg.component_index(n.c2) < 0)
      invalid("node references unknown component '" + n.c1 + "'/'" + n.c2 + "'");
  }
  for (size_t gi = 0; gi < cfg.germs.size(); ++gi) {
    const auto& gp = cfg.germs[gi];
    if (!gp.germ.warnings.empty())
      invalid("germ " + std::to_string(gi) + " (" + gp.equation + "): " +
              gp.germ.warnings.front());
    if (gp.germ.factors.empty())
      invalid("germ " + std::to_string(gi) + " does not vanish at its point");
    if (gp.branch_map.size() != gp.germ.factors.size())
      invalid("germ " + std::to_string(gi) + ": branch_map must map every factor (" +
              std::to_string(gp.germ.factors.size()) + " factors)");
    for (const auto& [fi, cid] : gp.branch_map) {
      if (fi < 0 || fi >= static_cast<int>(gp.germ.factors.size()))
        invalid("germ " + std::to_string(gi) + ": branch_map index " +
                std::to_string(fi) + " out of range");
      int ci = cfg.component_index(cid);
      if (ci < 0)
        invalid("germ " + std::to_string(gi) + ": unknown component '" + cid + "'");
      if (cfg.components[ci].mult != gp.germ.factors[fi].mult)
        invalid("germ " + std::to_string(gi) + ": factor " + std::to_string(fi) +
                " has multiplicity " + str(gp.germ.factors[fi].mult) +
                " but component '" + cid + "' has multiplicity " +
                str(cfg.components[ci].mult));
    }
  }
}

}  // namespace

ResolvedFiber resolve_fiber(const FiberConfig& cfg) {
  validate_config(cfg);
  ResolvedFiber rf;
  for (const auto& c : cfg.components)
    rf.vertices.push_back({c.id, c.mult, c.genus, false});

  for (const auto& n : cfg.nodes) {
    int i = cfg.component_index(n.c1), j = cfg.component_index(n.c2);
    rf.edges.push_back({i, j, cfg.components[i].mult, cfg.components[j].mult, 1, -1});
  }

  for (size_t gi = 0; gi < cfg.germs.size(); ++gi) {
    const auto& gp = cfg.germs[gi];
    ResolutionReport rep = embedded_resolution(gp.germ);
    // vertex index per curve of the report
    std::vector<int> vertex_of(rep.curves.size(), -1);
    for (size_t c = 0; c < rep.curves.size(); ++c) {
      const CurveRef& cr = rep.curves[c];
      if (cr.kind == CurveRef::Kind::strict_factor) {
        vertex_of[c] = cfg.component_index(gp.branch_map.at(cr.index));
      } else {
        vertex_of[c] = static_cast<int>(rf.vertices.size());
        rf.vertices.push_back({"p" + std::to_string(gi) + "." + cr.label, cr.mult,
                               0, true});
      }
    }
    for (const auto& node : rep.nodes)
      rf.edges.push_back({vertex_of[node.owner_a], vertex_of[node.owner_b],
                          node.a, node.b, node.count, static_cast<int>(gi)});
    rf.germ_reports.push_back(std::move(rep));
  }

  rf.M = 1;
  for (const auto& v : rf.vertices) rf.M = lcm(rf.M, v.mult);

  // connectivity of the dual graph
  if (rf.vertices.size() > 1) {
    std::vector<int> comp(rf.vertices.size(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : rf.edges) {
        int w = -1;
        if (e.v1 == v) w = e.v2;
        else if (e.v2 == v) w = e.v1;
        if (w >= 0 && comp[w] < 0) {
          comp[w] = 0;
          stack.push_back(w);
        }
      }
    }
    for (size_t i = 0; i < rf.vertices.size(); ++i)
      if (comp[i] < 0)
        invalid("configuration is not connected (component '" + rf.vertices[i].name +
                "' is isolated)");
  }
  return rf;
}

NumericBasics numeric_basics(const FiberConfig& cfg, const ResolvedFiber& rf) {
  NumericBasics nb;
  const int l = static_cast<int>(cfg.components.size());

  // pairwise intersection numbers of the input components
  std::map<std::pair<int, int>, Int> inter;
  for (const auto& n : cfg.nodes) {
    int i = cfg.component_index(n.c1), j = cfg.component_index(n.c2);
    if (i != j) inter[std::minmax(i, j)] += 1;
  }
  for (size_t gi = 0; gi < cfg.germs.size(); ++gi) {
    const auto& gp = cfg.germs[gi];
    auto pairs = strict_pair_intersections(rf.germ_reports[gi]);
    for (const auto& [key, val] : pairs) {
      int ci = cfg.component_index(gp.branch_map.at(key.first));
      int cj = cfg.component_index(gp.branch_map.at(key.second));
      if (ci != cj) inter[std::minmax(ci, cj)] += val;
    }
  }

  // Zariski relation: Gamma_i . F = 0 determines the self-intersections
  std::vector<Int> self(l);
  for (int i = 0; i < l; ++i) {
    Int cross = 0;
    for (int j = 0; j < l; ++j) {
      if (j == i) continue;
      auto it = inter.find(std::minmax(i, j));
      if (it != inter.end()) cross += cfg.components[j].mult * it->second;
    }
    Rational s = -Rational(cross, cfg.components[i].mult);
    if (!s.is_integer())
      invalid("Zariski relation gives non-integral self-intersection " + s.str() +
              " for component '" + cfg.components[i].id + "'");
    self[i] = s.as_integer();
    nb.self_int[cfg.components[i].id] = self[i];
  }
  Int fred2 = 0;
  for (int i = 0; i < l; ++i) fred2 += self[i];
  for (const auto& [key, val] : inter) fred2 += 2 * val;
  nb.Fred2 = fred2;

  // arithmetic genus per component and of F_red (normalization genera plus
  // local delta invariants)
  Int delta_total = 0;
  nb.mu = 0;
  std::vector<Int> pa(l);
  for (int i = 0; i < l; ++i) pa[i] = cfg.components[i].genus;
  for (size_t gi = 0; gi < cfg.germs.size(); ++gi) {
    const auto& gp = cfg.germs[gi];
    const auto& rep = rf.germ_reports[gi];
    LocalInvariants li = invariants_from_report(rep);
    delta_total += li.delta;
    nb.mu += li.mu;
    for (int i = 0; i < l; ++i) {
      std::vector<bool> subset(gp.germ.factors.size(), false);
      bool any = false;
      for (const auto& [fi, cid] : gp.branch_map)
        if (cfg.component_index(cid) == i) subset[fi] = any = true;
      if (any) pa[i] += delta_of_subset(rep, subset);
    }
  }
  delta_total += Int(cfg.nodes.size());  // each declared node has delta 1
  for (const auto& n : cfg.nodes) {
    // a declared self-node also contributes to its component's p_a
    int i = cfg.component_index(n.c1), j = cfg.component_index(n.c2);
    if (i == j) pa[i] += 1;
  }
  nb.mu += Int(cfg.nodes.size());  // mu = 1 per node

  Int pa_red = -Int(l) + 1 + delta_total;
  for (int i = 0; i < l; ++i) pa_red += cfg.components[i].genus;
  nb.pa_red = pa_red;
  for (int i = 0; i < l; ++i) nb.pa_comp[cfg.components[i].id] = pa[i];

  // genus from adjunction: 2g - 2 = sum n_i (2 p_a(Gamma_i) - 2 - Gamma_i^2)
  Int kf = 0;
  for (int i = 0; i < l; ++i)
    kf += cfg.components[i].mult * (2 * pa[i] - 2 - self[i]);
  if (kf % 2 != 0) invalid("adjunction gives odd K.F = " + str(kf));
  Int g = kf / 2 + 1;
  if (g <= 0) invalid("fiber genus " + str(g) + " <= 0");
  if (cfg.declared_genus && *cfg.declared_genus != g)
    invalid("declared genus " + str(*cfg.declared_genus) +
            " does not match computed genus " + str(g));
  nb.g = g;

  nb.N = g - pa_red;
  if (nb.N < 0)
    invalid("N_F = " + str(nb.N) + " < 0; inconsistent configuration");
  nb.e = 2 * nb.N + nb.mu;
  return nb;
}

bool is_semistable(const FiberConfig& cfg) {
  for (const auto& c : cfg.components)
    if (c.mult != 1) return false;
  for (const auto& g : cfg.germs)
    if (!is_ordinary_double(g.germ.reduced())) return false;
  return true;
}

namespace {

Rational kodaira_c2(const std::string& type) {
  if (type == "mI_b") return Rational(0);
  if (type == "I*_b") return Rational(6);
  if (type == "II") return Rational(2);
  if (type == "III") return Rational(3);
  if (type == "IV") return Rational(4);
  if (type == "IV*") return Rational(8);
  if (type == "III*") return Rational(9);
  if (type == "II*") return Rational(10);
  throw std::domain_error("kodaira_elliptic: unknown type tag '" + type + "'");
}

}  // namespace

KodairaValues kodaira_elliptic(const std::string& type, const Int& b) {
  if ((type == "mI_b" || type == "I*_b") && b < 0)
    throw std::domain_error("kodaira_elliptic: b must be >= 0");
  Rational c2 = kodaira_c2(type);
  return {Rational(0), c2, c2 / Rational(12)};
}

FiberInvariants fiber_invariants(const FiberConfig& cfg) {
  ResolvedFiber rf = resolve_fiber(cfg);
  NumericBasics nb = numeric_basics(cfg, rf);

  FiberInvariants fi;
  fi.N = nb.N;
  fi.e = nb.e;
  fi.mu = nb.mu;
  fi.Fred2 = nb.Fred2;
  fi.pa_red = nb.pa_red;
  fi.g = nb.g;
  fi.semistable = is_semistable(cfg);

  fi.alpha_sum = Rational(0);
  fi.beta_sum = Rational(0);
  for (const auto& rep : rf.germ_reports) {
    LocalInvariants li = invariants_from_report(rep);
    fi.alpha_sum += Rational(li.alpha);
    fi.beta_sum += li.beta;
  }
  for (const auto& n : cfg.nodes) {
    int i = cfg.component_index(n.c1), j = cfg.component_index(n.c2);
    fi.beta_sum += bracket(cfg.components[i].mult, cfg.components[j].mult);
  }

  // structural flags
  bool all_equal = true;
  for (const auto& c : cfg.components) all_equal &= (c.mult == cfg.components[0].mult);
  bool nodes_only = true;
  for (const auto& g : cfg.germs) nodes_only &= is_ordinary_double(g.germ.reduced());
  fi.n_fred_with_nodes_only = all_equal && nodes_only;
  fi.mult_comps_all_minus_two = true;
  for (const auto& c : cfg.components) {
    if (c.mult < 2) continue;
    bool minus_two = c.genus == 0 && nb.pa_comp.at(c.id) == 0 && nb.self_int.at(c.id) == -2;
    fi.mult_comps_all_minus_two &= minus_two;
  }

  if (fi.semistable) {
    fi.c1sq = fi.c2 = fi.chi = fi.c_minus1 = Rational(0);
    return fi;
  }

  if (nb.g == 1) {
    if (!cfg.kodaira_type)
      invalid("genus-1 fiber: declare kodaira_type to use the elliptic table");
    KodairaValues kv = kodaira_elliptic(*cfg.kodaira_type,
                                        cfg.kodaira_b.value_or(Int(0)));
    fi.c1sq = kv.c1sq;
    fi.c2 = kv.c2;
    fi.chi = kv.chi;
    // Back-solve c_{-1} and check the two invariant formulas agree; a
    // mismatch means the configuration is not of the declared type.
    fi.c_minus1 = fi.c2 - Rational(2 * fi.N + fi.mu) + fi.beta_sum;
    Rational c1_check =
        Rational(4 * fi.N + fi.Fred2) + fi.alpha_sum - fi.c_minus1;
    if (c1_check != fi.c1sq || fi.c_minus1.sign() < 0)
      invalid("configuration does not match declared Kodaira type " +
              *cfg.kodaira_type);
    if (!fi.chi.is_zero()) fi.lambda = fi.c1sq / fi.chi;
    return fi;
  }

  CoverGraph cg = cyclic_cover_graph(rf, rf.M);
  SemistableModel model = contract_minus_ones(cg);
  fi.c_minus1 = model.c_minus1;
  fi.c1sq = Rational(4 * fi.N + fi.Fred2) + fi.alpha_sum - fi.c_minus1;
  fi.c2 = Rational(2 * fi.N + fi.mu) - fi.beta_sum + fi.c_minus1;
  fi.chi = (fi.c1sq + fi.c2) / Rational(12);
  if (fi.c1sq.sign() < 0 || fi.c2.sign() < 0 || fi.chi.sign() <= 0)
    throw std::logic_error("fiber: non-semistable fiber with non-positive invariants (" +
                           fi.c1sq.str() + ", " + fi.c2.str() + ")");
  fi.lambda = fi.c1sq / fi.chi;
  return fi;
}

}  // namespace pencil
