#include "pencil/resolution.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace pencil {

Int ResolutionStep::m_of(const Int& d) const {
  Int s = 0;
  for (const auto& [n, ord] : partials) s += gcd(d, n) * ord;
  return s;
}

Int ResolutionReport::lcm_multiplicities() const {
  Int m = 1;
  for (const auto& c : curves) m = lcm(m, c.mult);
  return m;
}

std::string ResolutionReport::summary() const {
  std::ostringstream os;
  os << "curves:\n";
  for (size_t i = 0; i < curves.size(); ++i)
    os << "  [" << i << "] " << curves[i].label << "  mult " << curves[i].mult.get_str()
       << (curves[i].kind == CurveRef::Kind::exceptional ? "  (exceptional)" : "") << "\n";
  os << "blow-ups:\n";
  for (size_t i = 0; i < steps.size(); ++i)
    os << "  step " << i + 1 << ": m=" << steps[i].m.get_str()
       << " m*=" << steps[i].m_star.get_str() << "\n";
  os << "nodes:\n";
  for (const auto& n : nodes) {
    os << "  (" << n.a.get_str() << "," << n.b.get_str() << ") " << curves[n.owner_a].label
       << " x " << curves[n.owner_b].label;
    if (n.count > 1) os << "  [" << n.count << " conjugate points]";
    os << "\n";
  }
  return os.str();
}

Int multiplicity_at(const Poly2& p, const Rational& x0, const Rational& y0) {
  if (p.is_zero()) throw std::domain_error("multiplicity_at: zero polynomial");
  int o = p.shifted(x0, y0).order();
  return Int(o);
}

bool is_ordinary_double(const Poly2& reduced_germ) {
  if (reduced_germ.is_zero() || reduced_germ.order() != 2) return false;
  Poly2 lf = reduced_germ.lowest_form();
  Rational a = lf.coeff(2, 0), b = lf.coeff(1, 1), c = lf.coeff(0, 2);
  return !(b * b - Rational(4) * a * c).is_zero();
}

namespace {

int sum_orders(const Site& s) {
  int m = 0;
  for (const auto& c : s.curves) m += c.ord;
  return m;
}

class Resolver {
 public:
  explicit Resolver(const CurveGerm& germ) {
    if (!germ.vanishes_at_origin())
      throw std::domain_error("embedded_resolution: germ does not vanish at the origin");
    Site root;
    root.id = 0;
    for (size_t i = 0; i < germ.factors.size(); ++i) {
      const auto& f = germ.factors[i];
      report_.curves.push_back({CurveRef::Kind::strict_factor, static_cast<int>(i),
                                f.mult, f.poly.str()});
      root.curves.push_back({static_cast<int>(i), f.poly, f.poly.order()});
    }
    report_.strict_count = static_cast<int>(germ.factors.size());
    root.m_red = sum_orders(root);
    report_.sites.push_back(std::move(root));
  }

  ResolutionReport run() {
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int sid = queue.front();
      queue.pop_front();
      process(sid, queue);
      if (report_.sites.size() > 100000)
        throw std::runtime_error("embedded_resolution: site limit exceeded");
    }
    return std::move(report_);
  }

 private:
  void process(int sid, std::deque<int>& queue) {
    const int m_red = report_.sites[sid].m_red;
    if (m_red <= 1) {
      report_.sites[sid].status = Site::Status::smooth;
      return;
    }
    if (m_red == 2 && try_node(sid)) return;
    blow_up(sid, queue);
  }

  // Records the site as an ordinary double point if it is one.
  bool try_node(int sid) {
    Site& s = report_.sites[sid];
    if (s.curves.size() == 2) {
      const Poly2 l1 = s.curves[0].eq.lowest_form();
      const Poly2 l2 = s.curves[1].eq.lowest_form();
      Rational det = l1.coeff(1, 0) * l2.coeff(0, 1) - l1.coeff(0, 1) * l2.coeff(1, 0);
      if (det.is_zero()) return false;  // common tangent
      record_node(sid, s.curves[0].curve, s.curves[1].curve, 1);
      return true;
    }
    // single curve of order 2: node iff the tangent form has two distinct
    // directions (nonzero discriminant; conjugate directions accepted)
    if (is_ordinary_double(s.curves[0].eq)) {
      record_node(sid, s.curves[0].curve, s.curves[0].curve, 1);
      return true;
    }
    return false;
  }

  void record_node(int sid, int c1, int c2, int count) {
    report_.sites[sid].status = Site::Status::node;
    report_.sites[sid].count = count;
    Int a = report_.curves[c1].mult, b = report_.curves[c2].mult;
    if (a > b) {
      std::swap(a, b);
      std::swap(c1, c2);
    }
    report_.nodes.push_back({a, b, c1, c2, count, sid});
  }

  [[noreturn]] void irrational(const std::vector<int>& involved) {
    std::string names;
    for (int c : involved) {
      if (!names.empty()) names += ", ";
      names += report_.curves[c].label;
    }
    throw std::domain_error(
        "embedded_resolution: irrational center; the resolution leaves Q "
        "(offending: " + names + ")");
  }

  void blow_up(int sid, std::deque<int>& queue) {
    Site& site = report_.sites[sid];
    site.status = Site::Status::blown;

    ResolutionStep step;
    step.site = sid;
    step.m = site.m_red;
    Int m_star = 0;
    for (const auto& c : site.curves) {
      m_star += report_.curves[c.curve].mult * c.ord;
      step.partials.push_back({report_.curves[c.curve].mult, c.ord});
    }
    step.m_star = m_star;
    report_.steps.push_back(std::move(step));

    const int e_idx = static_cast<int>(report_.curves.size());
    const int e_count = e_idx - report_.strict_count + 1;
    report_.curves.push_back({CurveRef::Kind::exceptional, e_count - 1, m_star,
                              "E" + std::to_string(e_count)});

    // Chart 1: (x, y) -> (x, x*y); the exceptional curve is {x = 0} and the
    // strict transforms meet it at the roots of their tangent restrictions.
    struct Chart1Data {
      int curve;
      Poly2 strict;
      std::vector<std::pair<Rational, int>> roots;
      UniPoly leftover;
      bool chart2;
    };
    std::vector<Chart1Data> data;
    const std::vector<SiteCurve> parent_curves = site.curves;
    for (const auto& c : parent_curves) {
      Chart1Data d;
      d.curve = c.curve;
      d.strict = c.eq.chart1().divide_xpow(c.ord);
      UniPoly g = d.strict.at_x0();
      d.chart2 = g.degree() < c.ord;
      d.roots = extract_rational_roots(g);
      d.leftover = g;
      data.push_back(std::move(d));
    }

    // Irrational directions are sound only as bundles of simple transversal
    // crossings: each leftover must be squarefree and the leftovers must be
    // pairwise coprime. Anything else needs a blow-up at a point outside Q.
    for (size_t i = 0; i < data.size(); ++i) {
      if (data[i].leftover.degree() < 1) continue;
      if (uni_gcd(data[i].leftover, data[i].leftover.derivative()).degree() > 0)
        irrational({data[i].curve});
      for (size_t j = i + 1; j < data.size(); ++j) {
        if (data[j].leftover.degree() < 1) continue;
        if (uni_gcd(data[i].leftover, data[j].leftover).degree() > 0)
          irrational({data[i].curve, data[j].curve});
      }
    }

    // Rational directions, sorted: one child site per direction.
    std::map<Rational, std::vector<int>> at_root;  // direction -> data index
    for (size_t i = 0; i < data.size(); ++i)
      for (const auto& [r, mult] : data[i].roots) at_root[r].push_back(static_cast<int>(i));
    for (const auto& [t0, members] : at_root) {
      Site child;
      child.id = static_cast<int>(report_.sites.size());
      child.parent = sid;
      child.depth = site_depth(sid) + 1;
      child.chart = 1;
      child.coord = t0;
      for (int i : members) {
        Poly2 eq = data[i].strict.shifted(Rational(0), t0);
        child.curves.push_back({data[i].curve, eq, eq.order()});
      }
      child.curves.push_back({e_idx, Poly2::var_x(), 1});
      child.m_red = sum_orders(child);
      report_.sites.push_back(std::move(child));
      queue.push_back(static_cast<int>(report_.sites.size()) - 1);
    }

    // Conjugate bundles of transversal crossings: recorded as node clusters.
    for (const auto& d : data) {
      if (d.leftover.degree() < 1) continue;
      Site cluster;
      cluster.id = static_cast<int>(report_.sites.size());
      cluster.parent = sid;
      cluster.depth = site_depth(sid) + 1;
      cluster.chart = 1;
      cluster.status = Site::Status::cluster;
      cluster.count = d.leftover.degree();
      cluster.curves.push_back({d.curve, d.strict, 1});
      cluster.curves.push_back({e_idx, Poly2::var_x(), 1});
      cluster.m_red = 2;
      int csid = cluster.id;
      report_.sites.push_back(std::move(cluster));
      Int a = report_.curves[d.curve].mult, b = m_star;
      int ca = d.curve, cb = e_idx;
      if (a > b) {
        std::swap(a, b);
        std::swap(ca, cb);
      }
      report_.nodes.push_back({a, b, ca, cb, d.leftover.degree(), csid});
    }

    // Chart 2 origin: the direction not covered by chart 1.
    std::vector<int> c2_members;
    for (size_t i = 0; i < data.size(); ++i)
      if (data[i].chart2) c2_members.push_back(static_cast<int>(i));
    if (!c2_members.empty()) {
      Site child;
      child.id = static_cast<int>(report_.sites.size());
      child.parent = sid;
      child.depth = site_depth(sid) + 1;
      child.chart = 2;
      for (int i : c2_members) {
        const SiteCurve& pc = parent_curves[i];
        Poly2 eq = pc.eq.chart2().divide_ypow(pc.ord);
        child.curves.push_back({data[i].curve, eq, eq.order()});
      }
      child.curves.push_back({e_idx, Poly2::var_y(), 1});
      child.m_red = sum_orders(child);
      report_.sites.push_back(std::move(child));
      queue.push_back(static_cast<int>(report_.sites.size()) - 1);
    }
  }

  int site_depth(int sid) const { return report_.sites[sid].depth; }

  ResolutionReport report_;
};

}  // namespace

ResolutionReport embedded_resolution(const CurveGerm& g) {
  return Resolver(g).run();
}

Int branches_of_subset(const ResolutionReport& r, const std::vector<bool>& in_subset) {
  auto strict_in = [&](int curve) {
    return r.is_strict(curve) && in_subset[r.curves[curve].index];
  };
  Int k = 0;
  for (const auto& n : r.nodes) {
    if (strict_in(n.owner_a)) k += n.count;
    if (strict_in(n.owner_b)) k += n.count;
  }
  for (const auto& s : r.sites)
    if (s.status == Site::Status::smooth && s.curves.size() == 1 &&
        strict_in(s.curves[0].curve) && s.curves[0].ord == 1)
      k += 1;
  return k;
}

Int delta_of_subset(const ResolutionReport& r, const std::vector<bool>& in_subset) {
  Int delta = 0;
  for (const auto& s : r.sites) {
    Int m = 0;
    for (const auto& c : s.curves)
      if (r.is_strict(c.curve) && in_subset[r.curves[c.curve].index]) m += c.ord;
    delta += Int(s.count) * m * (m - 1) / 2;
  }
  return delta;
}

std::map<std::pair<int, int>, Int> strict_pair_intersections(const ResolutionReport& r) {
  std::map<std::pair<int, int>, Int> result;
  for (const auto& s : r.sites) {
    for (size_t i = 0; i < s.curves.size(); ++i) {
      if (!r.is_strict(s.curves[i].curve)) continue;
      for (size_t j = i + 1; j < s.curves.size(); ++j) {
        if (!r.is_strict(s.curves[j].curve)) continue;
        int fi = r.curves[s.curves[i].curve].index;
        int fj = r.curves[s.curves[j].curve].index;
        auto key = std::minmax(fi, fj);
        result[{key.first, key.second}] +=
            Int(s.count) * Int(s.curves[i].ord) * Int(s.curves[j].ord);
      }
    }
  }
  return result;
}

LocalInvariants invariants_from_report(const ResolutionReport& r) {
  LocalInvariants inv;
  inv.alpha = 0;
  Int milnor_sum = 0;
  for (const auto& s : r.steps) {
    inv.alpha += (s.m - 2) * (s.m - 2);
    milnor_sum += (s.m - 1) * (s.m - 2);
  }
  inv.beta = Rational(0);
  for (const auto& n : r.nodes) inv.beta += Rational(Int(n.count)) * bracket(n.a, n.b);
  std::vector<bool> all(r.strict_count, true);
  inv.k = branches_of_subset(r, all);
  inv.mu = milnor_sum + inv.k - 1;
  inv.delta = milnor_sum / 2 + inv.k - 1;
  inv.nu = r.sites.empty() ? 1 : Int(r.sites[0].m_red);
  return inv;
}

LocalInvariants local_invariants(const CurveGerm& g) {
  return invariants_from_report(embedded_resolution(g));
}

Int intersection_multiplicity(const Poly2& f, const Poly2& g) {
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("intersection_multiplicity: zero polynomial");
  if (!poly_gcd(f, g).is_constant())
    throw std::domain_error("intersection_multiplicity: curves share a component");
  if (!f.eval(Rational(0), Rational(0)).is_zero() ||
      !g.eval(Rational(0), Rational(0)).is_zero())
    return 0;

  CurveGerm germ;
  std::vector<std::pair<int, Int>> from_f, from_g;  // factor index, multiplicity
  for (const auto& [p, m] : squarefree_decompose(f)) {
    if (!p.eval(Rational(0), Rational(0)).is_zero()) continue;
    from_f.push_back({static_cast<int>(germ.factors.size()), Int(m)});
    germ.factors.push_back({p, Int(m)});
  }
  for (const auto& [p, m] : squarefree_decompose(g)) {
    if (!p.eval(Rational(0), Rational(0)).is_zero()) continue;
    from_g.push_back({static_cast<int>(germ.factors.size()), Int(m)});
    germ.factors.push_back({p, Int(m)});
  }

  ResolutionReport rep = embedded_resolution(germ);
  auto pairs = strict_pair_intersections(rep);
  Int total = 0;
  for (const auto& [fi, fm] : from_f)
    for (const auto& [gi, gm] : from_g) {
      auto key = std::minmax(fi, gi);
      auto it = pairs.find({key.first, key.second});
      if (it != pairs.end()) total += fm * gm * it->second;
    }
  return total;
}

BlowUpCharts blow_up_once(const CurveGerm& g) {
  if (!g.vanishes_at_origin())
    throw std::domain_error("blow_up_once: center not on the germ");
  BlowUpCharts out;
  out.exc_mult = 0;
  for (const auto& f : g.factors) {
    int ord = f.poly.order();
    out.exc_mult += f.mult * ord;
    out.chart1.push_back(f.poly.chart1().divide_xpow(ord));
    out.chart2.push_back(f.poly.chart2().divide_ypow(ord));
  }
  return out;
}

}  // namespace pencil
