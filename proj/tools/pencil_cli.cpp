// pencil: exact base-change invariants of singular fibers of pencils of
// curves from local germ data, with fibration-level ledgers and inequality
// certificates.
//
// Subcommands: germ, hj, fiber, sstable, basechange, ledger, check, corpus.
// Exit codes: 0 success, 1 a certificate check failed, 2 input error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pencil/certify.hpp"
#include "pencil/cover.hpp"
#include "pencil/cyclic.hpp"
#include "pencil/io.hpp"

namespace fs = std::filesystem;
using namespace pencil;

namespace {

struct Options {
  std::string format = "text";
  std::string out;
  bool strict = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty())
    std::cout << text;
  else
    io::write_file(opt.out, text);
}

std::string slope_line(const Rational& r) {
  return r.str() + " (= " + r.decimal(6) + ")";
}

int run_germ(const std::string& expr, const Options& opt) {
  CurveGerm germ = parse_germ(expr);
  if (opt.strict && !germ.warnings.empty())
    throw std::domain_error("germ: " + germ.warnings.front());
  ResolutionReport rep = embedded_resolution(germ);
  LocalInvariants li = invariants_from_report(rep);
  if (opt.format == "structured") {
    emit(opt, io::germ_report_json(expr, germ, rep, li));
    return 0;
  }
  std::ostringstream os;
  os << "germ: " << germ.str() << "\n";
  for (const auto& w : germ.warnings) os << "warning: " << w << "\n";
  os << rep.summary();
  os << "alpha = " << li.alpha.get_str() << "\n"
     << "beta  = " << li.beta.str() << "\n"
     << "mu    = " << li.mu.get_str() << "\n"
     << "delta = " << li.delta.get_str() << "\n"
     << "k     = " << li.k.get_str() << "\n"
     << "nu    = " << li.nu.get_str() << "\n"
     << "M     = " << rep.lcm_multiplicities().get_str() << "\n";
  emit(opt, os.str());
  return 0;
}

int run_hj(const Int& d, const Int& a, const Int& b, const Options& opt) {
  ChainDescription cd = resolve_cyclic(d, a, b);
  if (opt.format == "structured") {
    emit(opt, io::hj_report_json(d, a, b, cd));
    return 0;
  }
  std::ostringstream os;
  os << "z^" << d.get_str() << " = x^" << a.get_str() << " y^" << b.get_str() << "\n";
  os << "chains: " << cd.chains.size() << "\n";
  for (const auto& chain : cd.chains) {
    os << " ";
    if (chain.empty()) os << " (smooth point, A_0)";
    for (const auto& e : chain) os << " -" << e.get_str();
    os << "\n";
  }
  os << "K^2 = " << cd.k2.str() << "\n";
  os << "reduction: " << cd.reduction << "\n";
  emit(opt, os.str());
  return 0;
}

std::string render_fiber_text(const FiberConfig& cfg, const FiberInvariants& fi,
                              const CheckReport& checks) {
  std::ostringstream os;
  os << "fiber " << cfg.name << " (genus " << fi.g.get_str() << ")\n";
  os << "N_F = " << fi.N.get_str() << "  e_F = " << fi.e.get_str() << "  mu_F = "
     << fi.mu.get_str() << "  F_red^2 = " << fi.Fred2.get_str() << "  p_a(F_red) = "
     << fi.pa_red.get_str() << "\n";
  os << "sum alpha = " << fi.alpha_sum.str() << "  sum beta = " << fi.beta_sum.str()
     << "\n";
  os << "c1^2 = " << fi.c1sq.str() << "\n";
  os << "c2   = " << fi.c2.str() << "\n";
  os << "chi  = " << fi.chi.str() << "\n";
  os << "c_-1 = " << fi.c_minus1.str() << "\n";
  os << (fi.semistable ? "semistable: yes\n" : "semistable: no\n");
  if (fi.lambda) os << "lambda_F = " << slope_line(*fi.lambda) << "\n";
  os << "checks:\n" << checks.render();
  return os.str();
}

int run_fiber(const std::string& path, const Options& opt) {
  FiberConfig cfg = io::load_fiber(path);
  FiberInvariants fi = fiber_invariants(cfg);
  CheckReport checks = fiber_checks(fi);
  if (opt.format == "structured")
    emit(opt, io::fiber_report_json(cfg, fi, checks));
  else
    emit(opt, render_fiber_text(cfg, fi, checks));
  return checks.any_fail() ? 1 : 0;
}

int run_sstable(const std::string& path, const Int& degree, const Options& opt) {
  if (path.size() > 6 && path.substr(path.size() - 6) == ".graph") {
    // plain dual graph: contraction only
    DualGraph g = parse_graph(io::read_file(path));
    Int d = degree > 0 ? degree : Int(1);
    SemistableModel m = contract_minus_ones(g, d);
    std::ostringstream os;
    os << render_graph(g, "input") << render_graph(m.graph, "model");
    os << "contractions = " << m.contractions.get_str() << "\n";
    os << "c_-1 = " << m.c_minus1.str() << "\n";
    emit(opt, os.str());
    return 0;
  }
  FiberConfig cfg = io::load_fiber(path);
  ResolvedFiber rf = resolve_fiber(cfg);
  NumericBasics nb = numeric_basics(cfg, rf);
  Int d = degree > 0 ? degree : rf.M;
  if (d % rf.M != 0)
    throw std::domain_error("sstable: degree " + str(d) + " is not a multiple of M_F = " +
                            str(rf.M));
  CoverGraph cg = cyclic_cover_graph(rf, d);
  SemistableModel model = contract_minus_ones(cg);
  Rational c2v = verify_c2(model, nb.e, d);
  std::string beta_verify;
  try {
    beta_verify = verify_remark_beta(rf, model).str();
  } catch (const std::domain_error& e) {
    beta_verify = std::string("unavailable: ") + e.what();
  }
  if (opt.format == "structured") {
    emit(opt, io::sstable_report_json(cfg, rf, d, cg, model, c2v, beta_verify));
    return 0;
  }
  std::ostringstream os;
  os << "fiber " << cfg.name << ", M_F = " << rf.M.get_str() << ", degree d = "
     << d.get_str() << "\n";
  os << render_graph(cg.graph, "cover");
  os << render_graph(model.graph, "model");
  os << "contractions = " << model.contractions.get_str() << "\n";
  os << "c_-1 = " << model.c_minus1.str() << "\n";
  os << "c2 via cover  = " << c2v.str() << "\n";
  os << "beta-sum over contracted nodes = " << beta_verify << "\n";
  emit(opt, os.str());
  return 0;
}

int run_basechange(const std::string& ledger_path, const std::string& spec_path,
                   const Options& opt) {
  FibrationLedger ledger = io::load_ledger(ledger_path);
  BaseChangeSpec spec = io::load_spec(spec_path);
  BaseChangeInvariants bi = stabilizing_invariants(ledger, spec);
  if (opt.format == "structured") {
    emit(opt, io::basechange_report_json(bi));
    return 0;
  }
  std::ostringstream os;
  os << "base change of degree " << spec.d.get_str() << " on " << ledger.name << "\n";
  os << "K^2_pi = " << bi.K2.str() << "\n";
  os << "e_pi   = " << bi.e.str() << "\n";
  os << "chi_pi = " << bi.chi.str() << "\n";
  os << "stabilizing: " << (bi.stabilizing ? "yes" : "no") << "\n";
  if (bi.lambda) os << "lambda_pi = " << slope_line(*bi.lambda) << "\n";
  if (bi.cover_genus) os << "cover genus = " << bi.cover_genus->get_str() << "\n";
  emit(opt, os.str());
  return 0;
}

int run_ledger(const std::string& path, const Options& opt) {
  FibrationLedger ledger = io::load_ledger(path);
  IsotrivialityInvariants iso = isotriviality_invariants(ledger);
  CheckReport checks = slope_checks(ledger);
  checks.append(canonical_class_checks(ledger));
  if (opt.format == "structured") {
    emit(opt, io::ledger_report_json(ledger, iso, checks));
    return checks.any_fail() ? 1 : 0;
  }
  std::ostringstream os;
  os << "ledger " << ledger.name << " (g = " << ledger.g.get_str() << ", b = "
     << ledger.b.get_str() << ", s = " << ledger.s.get_str() << ")\n";
  os << "I_K   = " << iso.I_K.str() << "\n";
  os << "I_chi = " << iso.I_chi.str() << "\n";
  os << "I_e   = " << iso.I_e.str() << "\n";
  os << "isotrivial: " << (iso.isotrivial ? "yes" : "no") << "\n";
  if (!ledger.chi_f.is_zero())
    os << "lambda_f = " << slope_line(ledger.K2_f / ledger.chi_f) << "\n";
  if (!iso.I_chi.is_zero())
    os << "semistable-model slope = " << slope_line(iso.I_K / iso.I_chi) << "\n";
  os << "checks:\n" << checks.render();
  emit(opt, os.str());
  return checks.any_fail() ? 1 : 0;
}

int run_check(const std::vector<std::string>& paths, const Options& opt) {
  std::ostringstream os;
  bool failed = false;
  for (const auto& path : paths) {
    std::string text = io::read_file(path);
    bool is_ledger = text.find("\"chi_f\"") != std::string::npos;
    os << "== " << path << "\n";
    if (is_ledger) {
      FibrationLedger ledger = io::parse_ledger_json(text);
      CheckReport checks = slope_checks(ledger);
      checks.append(canonical_class_checks(ledger));
      failed |= checks.any_fail();
      os << checks.render();
    } else {
      FiberConfig cfg = io::parse_fiber_json(text, path);
      FiberInvariants fi = fiber_invariants(cfg);
      CheckReport checks = fiber_checks(fi);
      failed |= checks.any_fail();
      os << checks.render();
    }
  }
  emit(opt, os.str());
  return failed ? 1 : 0;
}

int run_corpus(const std::string& dir, const Options& opt) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  std::ostringstream os;
  bool failed = false;
  int errors = 0;
  os << "file  genus  c1^2  c2  chi  lambda  semistable  checks\n";
  for (const auto& f : files) {
    try {
      FiberConfig cfg = io::load_fiber(f);
      FiberInvariants fi = fiber_invariants(cfg);
      CheckReport checks = fiber_checks(fi);
      failed |= checks.any_fail();
      os << f << "  " << fi.g.get_str() << "  " << fi.c1sq.str() << "  " << fi.c2.str()
         << "  " << fi.chi.str() << "  " << (fi.lambda ? fi.lambda->str() : "-") << "  "
         << (fi.semistable ? "yes" : "no") << "  "
         << (checks.any_fail() ? "FAIL" : "ok") << "\n";
    } catch (const std::exception& e) {
      ++errors;
      os << f << "  error: " << e.what() << "\n";
    }
  }
  os << files.size() << " fibers, " << errors << " errors\n";
  emit(opt, os.str());
  if (errors > 0) return 2;
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact base-change invariants of singular fibers of pencils of curves"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", opt.out, "write the report to a file");
  app.add_flag("--strict", opt.strict, "treat warnings as errors");

  std::string germ_expr;
  auto* cmd_germ = app.add_subcommand("germ", "resolve a curve germ and print its invariants");
  cmd_germ->add_option("expr", germ_expr, "germ expression, e.g. \"(x^2+y^3)^2*y\"")
      ->required();

  long hj_d = 0, hj_a = 0, hj_b = 0;
  auto* cmd_hj = app.add_subcommand("hj", "Jung-Hirzebruch resolution of z^d = x^a y^b");
  cmd_hj->add_option("d", hj_d)->required();
  cmd_hj->add_option("a", hj_a)->required();
  cmd_hj->add_option("b", hj_b)->required();

  std::string fiber_path;
  auto* cmd_fiber = app.add_subcommand("fiber", "invariants of a fiber description file");
  cmd_fiber->add_option("file", fiber_path)->required();

  std::string sstable_path;
  long sstable_degree = 0;
  auto* cmd_sstable =
      app.add_subcommand("sstable", "semistable-model dual graphs and c_-1");
  cmd_sstable->add_option("file", sstable_path)->required();
  cmd_sstable->add_option("--degree", sstable_degree, "cover degree (default M_F)");

  std::string bc_ledger, bc_spec;
  auto* cmd_bc = app.add_subcommand("basechange", "invariants of a base change");
  cmd_bc->add_option("ledger", bc_ledger)->required();
  cmd_bc->add_option("spec", bc_spec)->required();

  std::string ledger_path;
  auto* cmd_ledger = app.add_subcommand("ledger", "isotriviality invariants and slope checks");
  cmd_ledger->add_option("file", ledger_path)->required();

  std::vector<std::string> check_paths;
  auto* cmd_check = app.add_subcommand("check", "full certificate over fiber/ledger files");
  cmd_check->add_option("files", check_paths)->required();

  std::string corpus_dir;
  auto* cmd_corpus = app.add_subcommand("corpus", "batch-evaluate a directory of fiber files");
  cmd_corpus->add_option("dir", corpus_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_germ) return run_germ(germ_expr, opt);
    if (*cmd_hj) return run_hj(Int(hj_d), Int(hj_a), Int(hj_b), opt);
    if (*cmd_fiber) return run_fiber(fiber_path, opt);
    if (*cmd_sstable) return run_sstable(sstable_path, Int(sstable_degree), opt);
    if (*cmd_bc) return run_basechange(bc_ledger, bc_spec, opt);
    if (*cmd_ledger) return run_ledger(ledger_path, opt);
    if (*cmd_check) return run_check(check_paths, opt);
    if (*cmd_corpus) return run_corpus(corpus_dir, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
