#include "pencil/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pencil::io {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::domain_error("file schema: " + what);
}

Int get_int(const json& j, const std::string& key) {
  if (!j.contains(key)) bad("missing field '" + key + "'");
  const json& v = j.at(key);
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return Int(v.get<std::string>());
  bad("field '" + key + "' must be an integer");
}

Int get_int_or(const json& j, const std::string& key, const Int& fallback) {
  if (!j.contains(key)) return fallback;
  return get_int(j, key);
}

Rational get_rational(const json& j, const std::string& key) {
  if (!j.contains(key)) bad("missing field '" + key + "'");
  const json& v = j.at(key);
  if (v.is_number_integer()) return Rational(Int(static_cast<long>(v.get<long long>())));
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  bad("field '" + key + "' must be an integer or a \"p/q\" string");
}

std::string get_string(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_string()) bad("missing string field '" + key + "'");
  return j.at(key).get<std::string>();
}

json int_json(const Int& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

json rat_json(const Rational& r) { return json(r.str()); }

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::domain_error("file schema: malformed JSON");
  return j;
}

FiberSummary parse_summary(const json& j, const std::string& fallback_name) {
  FiberSummary s;
  s.name = j.contains("name") ? get_string(j, "name") : fallback_name;
  s.c1sq = get_rational(j, "c1sq");
  s.c2 = get_rational(j, "c2");
  s.chi = get_rational(j, "chi");
  s.semistable = j.value("semistable", false);
  if (j.contains("M")) s.M = get_int(j, "M");
  if (j.contains("e_F")) s.e = get_int(j, "e_F");
  if (j.contains("nodes_only_multiple"))
    s.nodes_only_multiple = j.at("nodes_only_multiple").get<bool>();
  if (j.contains("mult_comps_minus_two"))
    s.mult_comps_minus_two = j.at("mult_comps_minus_two").get<bool>();
  return s;
}

}  // namespace

FiberConfig parse_fiber_json(const std::string& text, const std::string& fallback_name) {
  json j = parse_text(text);
  FiberConfig cfg;
  cfg.name = j.contains("name") ? get_string(j, "name") : fallback_name;
  if (!j.contains("components") || !j.at("components").is_array())
    bad("fiber file needs a 'components' array");
  for (const json& c : j.at("components")) {
    FiberComponent comp;
    comp.id = get_string(c, "id");
    comp.mult = get_int_or(c, "multiplicity", 1);
    comp.genus = get_int_or(c, "geometric_genus", 0);
    cfg.components.push_back(std::move(comp));
  }
  if (j.contains("singular_points")) {
    if (!j.at("singular_points").is_array()) bad("'singular_points' must be an array");
    for (const json& p : j.at("singular_points")) {
      std::string kind = get_string(p, "kind");
      if (kind == "node") {
        if (!p.contains("components") || !p.at("components").is_array() ||
            p.at("components").size() != 2)
          bad("node needs a 'components' array of two ids");
        Int inter = get_int_or(p, "intersection", 1);
        if (inter != 1)
          bad("node with local intersection > 1 is a tangency; describe it as a "
              "germ instead (e.g. \"x*(x+y^k)\")");
        cfg.nodes.push_back({p.at("components")[0].get<std::string>(),
                             p.at("components")[1].get<std::string>()});
      } else if (kind == "germ") {
        GermPoint gp;
        gp.equation = get_string(p, "local_equation");
        gp.germ = parse_germ(gp.equation);
        if (!p.contains("branch_map") || !p.at("branch_map").is_object())
          bad("germ needs a 'branch_map' object {factor index -> component id}");
        for (const auto& [key, val] : p.at("branch_map").items()) {
          int idx;
          try {
            idx = std::stoi(key);
          } catch (...) {
            bad("branch_map key '" + key + "' is not a factor index");
          }
          gp.branch_map[idx] = val.get<std::string>();
        }
        cfg.germs.push_back(std::move(gp));
      } else {
        bad("singular point kind must be 'node' or 'germ'");
      }
    }
  }
  if (j.contains("declared_genus")) cfg.declared_genus = get_int(j, "declared_genus");
  if (j.contains("kodaira_type")) cfg.kodaira_type = get_string(j, "kodaira_type");
  if (j.contains("kodaira_b")) cfg.kodaira_b = get_int(j, "kodaira_b");
  return cfg;
}

FiberConfig load_fiber(const std::string& path) {
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  auto dot = name.find('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return parse_fiber_json(read_file(path), name);
}

FibrationLedger parse_ledger_json(const std::string& text) {
  json j = parse_text(text);
  FibrationLedger led;
  led.name = j.contains("name") ? get_string(j, "name") : "ledger";
  led.g = get_int(j, "genus");
  led.b = get_int_or(j, "base_genus", 0);
  led.chi_f = get_rational(j, "chi_f");
  led.K2_f = get_rational(j, "K2_f");
  led.e_f = get_rational(j, "e_f");
  led.s = get_int_or(j, "singular_fiber_count", 0);
  led.semistable = j.value("semistable", false);
  led.hyperelliptic = j.value("hyperelliptic", false);
  if (j.contains("fibers")) {
    if (!j.at("fibers").is_array()) bad("'fibers' must be an array");
    int i = 0;
    for (const json& f : j.at("fibers"))
      led.fibers.push_back(parse_summary(f, "F" + std::to_string(i++)));
  }
  led.validate();
  return led;
}

FibrationLedger load_ledger(const std::string& path) {
  return parse_ledger_json(read_file(path));
}

BaseChangeSpec parse_spec_json(const std::string& text) {
  json j = parse_text(text);
  BaseChangeSpec spec;
  spec.d = get_int(j, "degree");
  if (j.contains("branch")) {
    if (!j.at("branch").is_array()) bad("'branch' must be an array");
    for (const json& b : j.at("branch")) {
      RamificationPoint pt;
      if (!b.contains("fiber")) bad("branch point needs a 'fiber' (index or \"smooth\")");
      const json& f = b.at("fiber");
      if (f.is_string()) {
        if (f.get<std::string>() != "smooth")
          bad("branch 'fiber' must be an index or \"smooth\"");
        pt.fiber = -1;
      } else {
        pt.fiber = f.get<int>();
      }
      if (!b.contains("profile") || !b.at("profile").is_array())
        bad("branch point needs a 'profile' array (partition of the degree)");
      for (const json& e : b.at("profile")) pt.profile.push_back(Int(static_cast<long>(e.get<long long>())));
      if (b.contains("pullback")) {
        if (!b.at("pullback").is_array()) bad("'pullback' must be an array");
        for (const json& p : b.at("pullback")) {
          if (p.is_null())
            pt.pullback.push_back(std::nullopt);
          else
            pt.pullback.push_back(parse_summary(p, "pullback"));
        }
      }
      spec.branch.push_back(std::move(pt));
    }
  }
  return spec;
}

BaseChangeSpec load_spec(const std::string& path) {
  return parse_spec_json(read_file(path));
}

// ---------------------------------------------------------------------------
// Structured reports
// ---------------------------------------------------------------------------

namespace {

json checks_json(const CheckReport& rep) {
  json arr = json::array();
  for (const auto& it : rep.items) {
    json c;
    c["id"] = it.id;
    c["status"] = it.status == CheckStatus::pass
                      ? "pass"
                      : it.status == CheckStatus::equality ? "equality-attained" : "fail";
    c["lhs"] = rat_json(it.lhs);
    c["rhs"] = rat_json(it.rhs);
    if (it.conditional) c["conditional"] = true;
    if (!it.note.empty()) c["note"] = it.note;
    arr.push_back(std::move(c));
  }
  return arr;
}

json graph_json(const DualGraph& g) {
  json out;
  json vs = json::array();
  for (const auto& v : g.vertices) {
    json jv;
    jv["id"] = v.name;
    jv["genus"] = int_json(v.genus);
    vs.push_back(std::move(jv));
  }
  json es = json::array();
  for (const auto& e : g.edges)
    es.push_back(json::array({g.vertices[e.v1].name, g.vertices[e.v2].name}));
  out["vertices"] = std::move(vs);
  out["edges"] = std::move(es);
  return out;
}

std::string dump(json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string germ_report_json(const std::string& expr, const CurveGerm& germ,
                             const ResolutionReport& rep, const LocalInvariants& li) {
  json j;
  j["version"] = 1;
  j["kind"] = "germ";
  j["expression"] = expr;
  json factors = json::array();
  for (const auto& f : germ.factors) {
    json jf;
    jf["poly"] = f.poly.str();
    jf["multiplicity"] = int_json(f.mult);
    factors.push_back(std::move(jf));
  }
  j["factors"] = std::move(factors);
  if (!germ.warnings.empty()) j["warnings"] = germ.warnings;
  json steps = json::array();
  for (const auto& s : rep.steps) {
    json js;
    js["m"] = int_json(s.m);
    js["m_star"] = int_json(s.m_star);
    steps.push_back(std::move(js));
  }
  j["blow_ups"] = std::move(steps);
  json curves = json::array();
  for (const auto& c : rep.curves) {
    json jc;
    jc["label"] = c.label;
    jc["multiplicity"] = int_json(c.mult);
    jc["exceptional"] = c.kind == CurveRef::Kind::exceptional;
    curves.push_back(std::move(jc));
  }
  j["curves"] = std::move(curves);
  json nodes = json::array();
  for (const auto& n : rep.nodes) {
    json jn;
    jn["a"] = int_json(n.a);
    jn["b"] = int_json(n.b);
    jn["owners"] = json::array({rep.curves[n.owner_a].label, rep.curves[n.owner_b].label});
    if (n.count > 1) jn["count"] = n.count;
    nodes.push_back(std::move(jn));
  }
  j["nodes"] = std::move(nodes);
  json inv;
  inv["alpha"] = int_json(li.alpha);
  inv["beta"] = rat_json(li.beta);
  inv["mu"] = int_json(li.mu);
  inv["delta"] = int_json(li.delta);
  inv["branches"] = int_json(li.k);
  inv["nu"] = int_json(li.nu);
  j["invariants"] = std::move(inv);
  j["M"] = int_json(rep.lcm_multiplicities());
  return dump(j);
}

std::string hj_report_json(const Int& d, const Int& a, const Int& b,
                           const ChainDescription& cd) {
  json j;
  j["version"] = 1;
  j["kind"] = "hj";
  j["d"] = int_json(d);
  j["a"] = int_json(a);
  j["b"] = int_json(b);
  json chains = json::array();
  for (const auto& chain : cd.chains) {
    json jc = json::array();
    for (const auto& e : chain) jc.push_back(int_json(-e));
    chains.push_back(std::move(jc));
  }
  j["chains"] = std::move(chains);
  j["K2"] = rat_json(cd.k2);
  j["reduction"] = cd.reduction;
  return dump(j);
}

std::string fiber_report_json(const FiberConfig& cfg, const FiberInvariants& fi,
                              const CheckReport& checks) {
  json j;
  j["version"] = 1;
  j["kind"] = "fiber";
  j["name"] = cfg.name;
  j["genus"] = int_json(fi.g);
  j["N"] = int_json(fi.N);
  j["e_F"] = int_json(fi.e);
  j["mu"] = int_json(fi.mu);
  j["Fred2"] = int_json(fi.Fred2);
  j["pa_red"] = int_json(fi.pa_red);
  j["alpha_sum"] = rat_json(fi.alpha_sum);
  j["beta_sum"] = rat_json(fi.beta_sum);
  j["c1sq"] = rat_json(fi.c1sq);
  j["c2"] = rat_json(fi.c2);
  j["chi"] = rat_json(fi.chi);
  j["c_minus1"] = rat_json(fi.c_minus1);
  j["semistable"] = fi.semistable;
  if (fi.lambda) j["lambda"] = rat_json(*fi.lambda);
  j["checks"] = checks_json(checks);
  return dump(j);
}

std::string sstable_report_json(const FiberConfig& cfg, const ResolvedFiber& rf,
                                const Int& d, const CoverGraph& cg,
                                const SemistableModel& model, const Rational& c2_verify,
                                const std::string& beta_verify) {
  json j;
  j["version"] = 1;
  j["kind"] = "sstable";
  j["name"] = cfg.name;
  j["M"] = int_json(rf.M);
  j["degree"] = int_json(d);
  j["cover"] = graph_json(cg.graph);
  j["model"] = graph_json(model.graph);
  j["contractions"] = int_json(model.contractions);
  j["c_minus1"] = rat_json(model.c_minus1);
  j["pre_contraction_edges"] = int_json(model.pre_edges);
  j["model_edges"] = int_json(model.e_count);
  j["c2_verify"] = rat_json(c2_verify);
  j["beta_verify"] = beta_verify;
  return dump(j);
}

std::string basechange_report_json(const BaseChangeInvariants& bi) {
  json j;
  j["version"] = 1;
  j["kind"] = "basechange";
  j["K2_pi"] = rat_json(bi.K2);
  j["e_pi"] = rat_json(bi.e);
  j["chi_pi"] = rat_json(bi.chi);
  j["stabilizing"] = bi.stabilizing;
  if (bi.lambda) j["lambda_pi"] = rat_json(*bi.lambda);
  if (bi.cover_genus) j["cover_genus"] = int_json(*bi.cover_genus);
  return dump(j);
}

std::string ledger_report_json(const FibrationLedger& ledger,
                               const IsotrivialityInvariants& iso,
                               const CheckReport& checks) {
  json j;
  j["version"] = 1;
  j["kind"] = "ledger";
  j["name"] = ledger.name;
  j["genus"] = int_json(ledger.g);
  j["base_genus"] = int_json(ledger.b);
  j["I_K"] = rat_json(iso.I_K);
  j["I_chi"] = rat_json(iso.I_chi);
  j["I_e"] = rat_json(iso.I_e);
  j["isotrivial"] = iso.isotrivial;
  if (!ledger.chi_f.is_zero()) j["lambda_f"] = rat_json(ledger.K2_f / ledger.chi_f);
  if (!iso.I_chi.is_zero()) j["semistable_slope"] = rat_json(iso.I_K / iso.I_chi);
  j["checks"] = checks_json(checks);
  return dump(j);
}

}  // namespace pencil::io
