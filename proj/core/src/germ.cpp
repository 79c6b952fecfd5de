#include "pencil/germ.hpp"

#include <algorithm>

namespace pencil {

Poly2 CurveGerm::product() const {
  Poly2 p = Poly2::constant(Rational(1));
  for (const auto& f : factors) p = p * f.poly.pow(f.mult);
  return p;
}

Poly2 CurveGerm::reduced() const {
  Poly2 p = Poly2::constant(Rational(1));
  for (const auto& f : factors) p = p * f.poly;
  return p;
}

std::string CurveGerm::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " * ";
    s += "(" + f.poly.str() + ")";
    if (f.mult != 1) s += "^" + pencil::str(f.mult);
  }
  return s;
}

namespace {

// Inserts a squarefree factor into a pairwise-coprime list, splitting
// overlaps. All polynomials involved are squarefree and normalized.
void insert_coprime(std::vector<GermFactor>& list, Poly2 g, Int mult) {
  if (g.is_constant()) return;
  for (size_t i = 0; i < list.size(); ++i) {
    Poly2 h = poly_gcd(list[i].poly, g);
    if (h.is_constant()) continue;
    Poly2 f1 = exact_divide(list[i].poly, h).normalized();
    Poly2 g1 = exact_divide(g, h).normalized();
    Int k = list[i].mult;
    list.erase(list.begin() + i);
    // h and f1 are coprime to every remaining entry; only g1 can overlap.
    list.push_back({h.normalized(), k + mult});
    if (!f1.is_constant()) list.push_back({f1, k});
    insert_coprime(list, g1, mult);
    return;
  }
  list.push_back({g.normalized(), mult});
}

}  // namespace

CurveGerm make_germ(const std::vector<std::pair<Poly2, Int>>& written,
                    bool exclude_non_vanishing) {
  CurveGerm germ;
  std::vector<GermFactor> all;
  for (const auto& [base, exp] : written) {
    if (base.is_zero()) throw std::domain_error("germ: zero polynomial factor");
    if (base.is_constant()) continue;  // unit
    for (const auto& [p, m] : squarefree_decompose(base))
      insert_coprime(all, p, Int(m) * exp);
  }
  for (auto& f : all) {
    if (exclude_non_vanishing && !f.poly.eval(Rational(0), Rational(0)).is_zero()) {
      germ.warnings.push_back("factor " + f.poly.str() +
                              " does not vanish at the origin; excluded");
      continue;
    }
    germ.factors.push_back(std::move(f));
  }
  std::sort(germ.factors.begin(), germ.factors.end(),
            [](const GermFactor& a, const GermFactor& b) {
              return canonical_less(a.poly, b.poly);
            });
  return germ;
}

CurveGerm parse_germ(const std::string& text) {
  return make_germ(parse_factored(text));
}

}  // namespace pencil
